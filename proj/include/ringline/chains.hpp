#pragma once

#include <array>
#include <string>
#include <vector>

#include "ringline/action.hpp"
#include "ringline/designs.hpp"
#include "ringline/numbers.hpp"
#include "ringline/projline.hpp"
#include "ringline/ring.hpp"

namespace ringline {

// An injective unital homomorphism of a finite field K into a ring R; the
// image is then a subfield of R containing 1.  Every constructor verifies the
// homomorphism exhaustively before returning.
struct SubfieldEmbedding {
    RingPtr field;           // K, standalone table
    RingPtr ring;            // R
    std::vector<int> map;    // K element -> R element
    std::vector<int> image;  // sorted R elements
    std::vector<char> image_mask;
    std::string strategy;    // "prime" | "constants" | "wedderburn" | "search" | "witness"
    std::string note;        // human-readable provenance (e.g. generator image)
};

// GF(p) via multiples of 1; needs a prime characteristic.
SubfieldEmbedding embed_prime_field(const RingPtr& ring);

// The structural coefficient field of the construction (GF(p) under GF(p^d),
// GF(q) under dual/twisted dual numbers and exterior algebras, scalar matrices
// of a matrix ring over a field).
SubfieldEmbedding embed_constants(const RingPtr& ring);

// For a local ring: a subfield L with R = rad R (+) L and L isomorphic to
// R/rad R, found by searching for a root of the residue field's modulus.
SubfieldEmbedding embed_wedderburn_complement(const RingPtr& ring);

// Embeds the given GF field by locating a root of its defining modulus in R
// (first root in element order) and evaluating coefficient polynomials there.
SubfieldEmbedding embed_field_by_search(const RingPtr& ring, const RingPtr& field);

// Same evaluation map with a caller-chosen root image for the field generator.
SubfieldEmbedding embed_generator_witness(const RingPtr& ring, const RingPtr& field,
                                          int generator_image);

// Witness file: `field <spec>` and `generator <element index>` lines;
// '#' starts a comment.
SubfieldEmbedding load_embedding_witness(const RingPtr& ring, const std::string& path,
                                         const BuildOptions& options = {});

// Dispatcher for the CLI: `prime`, `constants`, `wedderburn`, a field spec
// such as GF(4), or a witness file path.
SubfieldEmbedding embed_subfield(const RingPtr& ring, const std::string& field_arg,
                                 const BuildOptions& options = {});

// Throws std::invalid_argument when the map is not an injective unital
// homomorphism from a field.
void verify_embedding(const SubfieldEmbedding& emb);

struct ChainGeometryOptions {
    long long orbit_cap = 1000000;
    // Below this point count the chain-count constancy over mutually distant
    // triples and the pair-coverage law are checked exhaustively; above it,
    // on sample_count fixed-seed random instances.
    int exhaustive_limit = 500;
    int sample_count = 100;
};

// The chain geometry on P(R) induced by K: the standard chain is the embedded
// P(K), chains are its GL2(R) orbit.  lambda3 (chains through a mutually
// distant triple) is counted directly and must match the normaliser index;
// the chain count must equal |GL2(R)| / |stabiliser of the standard chain|.
struct ChainGeometry {
    RingPtr ring;
    SubfieldEmbedding embedding;
    ProjLine line;
    std::vector<std::vector<int>> generator_perms;  // GL2 generators as point permutations
    std::vector<int> standard_chain;                // sorted point ids, size |K|+1
    std::vector<std::vector<int>> chains;           // sorted blocks, lex order
    long long lambda3 = 0;
    long long normaliser = 0;  // [R* : N], N the normaliser of K* in R*
    Int gl2;                   // |GL2(R)|
    Int chain_stabiliser;      // gl2 / number of chains
};

ChainGeometry build_chain_geometry(const ProjLine& line, const SubfieldEmbedding& emb,
                                   const ChainGeometryOptions& options = {});

// [R* : N] with N = { n in R* : n^-1 K* n = K* }, by exhaustive conjugation.
long long normaliser_index(const RingTable& ring, const SubfieldEmbedding& emb);

// The points R(1,0), R(0,1), R(1,1).
std::array<int, 3> standard_triple(const ProjLine& line);

// F = intersection of a^-1 K a over all units a, and the intersection of all
// chains through a mutually distant triple, which must be the image of the
// embedded P(F) under a matrix taking the standard triple to the given one.
struct FChainResult {
    std::vector<int> f_elements;    // the subfield F inside R, sorted
    std::vector<int> intersection;  // sorted point ids
};
FChainResult f_chain_intersection(const ChainGeometry& geo, const std::array<int, 3>& triple);

// Classes = radical parallel classes, blocks = chains, declared level 3.
// Certification is the caller's business (it fails off the local case).
Design design_from_chain_geometry(const ChainGeometry& geo);

// v, s1 = |rad R| (parallel class size), s2 = v - |R| (non-neighbour count of
// a point), k = |K|+1, lambda3, plus the two laws that characterise local
// rings: s1 = s2 and every parallel-transversal 3-set lying on a chain.
struct ChainProfile {
    long long v = 0;
    long long s1 = 0;
    long long s2 = 0;
    long long k = 0;
    long long lambda3 = 0;
    bool s1_equals_s2 = false;
    bool transversal_triples_covered = false;
    bool local_ring = false;
};
ChainProfile chain_geometry_profile(const ChainGeometry& geo);

// Spera's construction driven by the geometry's own group: classes are the
// parallel classes, the group is GL2(R) as point permutations, and the base
// block is the standard chain with `drop` of the points R(1,0), R(0,1),
// R(1,1) removed (in that order).  Transitivity on transversal 3-sets follows
// from distant-triple transitivity when R is local, so it is assumed there
// for t <= 3 and checked by orbit otherwise.
SperaOutcome spera_from_chain_geometry(const ChainGeometry& geo, int t, int drop = 0,
                                       long long orbit_cap = 1000000,
                                       long long enum_cap = 10000000);

// The truncated-chain designs over a local algebra: drop 1, 2, or 3 requires
// |K| > 2, 3, or 4 and certifies with block size and lambda3
//   (q, q-2), (q-1, (q-2)(q-3)/2), (q-2, (q-2)(q-3)(q-4)/6)
// where q = |K|; the construction cross-checks that table.
Design truncated_chain_design(const ChainGeometry& geo, int drop, long long orbit_cap = 1000000,
                              long long enum_cap = 10000000);

// The chain geometry of GF(q^h) over GF(q) as a design: 3-(1, q+1, 1) with
// v = q^h + 1 and singleton classes.
Design moebius_design(long long q, int h, const BuildOptions& options = {});

}  // namespace ringline

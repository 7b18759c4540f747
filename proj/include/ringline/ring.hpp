#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringline/numbers.hpp"
#include "ringline/ringspec.hpp"

namespace ringline {

// Galois field construction data: GF(p^d) modelled as GF(p)[t]/(f) with f the
// first monic irreducible of degree d in base-p coefficient order.  modulus
// holds the d+1 coefficients of f, constant term first.
struct GfInfo {
    long long p = 0;
    int d = 0;
    std::vector<int> modulus;
};

// A finite associative unital ring with explicit operation tables.  Elements
// are indices 0..order-1 in a construction-specific canonical order; all
// structure data (units, radical, inverses) is derived once at build time.
struct RingTable {
    std::string spec;
    int order = 0;
    int zero = 0;
    int one = 0;
    std::vector<std::uint16_t> add_table;  // order*order, row-major
    std::vector<std::uint16_t> mul_table;
    std::vector<int> neg_table;
    std::vector<int> inv_table;  // -1 for non-units
    std::vector<std::string> labels;

    std::vector<int> units;    // ascending element indices
    std::vector<char> unit_mask;
    std::vector<int> radical;  // ascending
    std::vector<char> rad_mask;
    bool commutative = false;
    bool local_ring = false;
    long long characteristic = 0;

    std::optional<GfInfo> gf;
    // Structural coefficient embedding of the base ring, when the construction
    // has one (GF over its prime field, dual/twisted dual, exterior algebra,
    // matrix ring via scalars).
    std::shared_ptr<const RingTable> base;
    std::vector<int> base_embedding;

    int add(int a, int b) const { return add_table[static_cast<size_t>(a) * order + b]; }
    int mul(int a, int b) const { return mul_table[static_cast<size_t>(a) * order + b]; }
    int neg(int a) const { return neg_table[a]; }
    int sub(int a, int b) const { return add(a, neg_table[b]); }
    int inv(int a) const { return inv_table[a]; }
    bool is_unit(int a) const { return unit_mask[a] != 0; }
    bool in_radical(int a) const { return rad_mask[a] != 0; }
    bool is_field() const { return static_cast<int>(units.size()) == order - 1; }

    const std::string& label(int a) const { return labels[a]; }
};

using RingPtr = std::shared_ptr<const RingTable>;

struct BuildOptions {
    long long order_cap = 4096;
};

// Builds the ring described by a spec (or spec text), including all derived
// structure.  Ring axioms are checked exhaustively up to order 256 and on
// 10^4 fixed-seed random triples above; table-backed rings are always checked
// exhaustively.  Throws CapError when the order exceeds options.order_cap.
RingPtr build_ring(const RingSpec& spec, const BuildOptions& options = {});
RingPtr build_ring(const std::string& spec_text, const BuildOptions& options = {});

// Validates externally supplied tables and derives all metadata.  labels may
// be empty (element indices are used).  Throws std::invalid_argument with a
// witness on any axiom violation.
RingPtr ring_from_tables(const std::string& name, int order, std::vector<int> add,
                         std::vector<int> mul, std::vector<std::string> labels,
                         bool exhaustive = true);

// Text format: `ring <order>` header, then `labels`, `add`, `mul` sections
// (whitespace-separated labels and index matrices); '#' starts a comment.
RingPtr load_table_ring(const std::string& path);

struct RingHom {
    RingPtr domain;
    RingPtr codomain;
    std::vector<int> map;  // domain element -> codomain element
};

// Exhaustively checks that map is a unital ring homomorphism.
bool verify_hom(const RingHom& hom);

struct QuotientResult {
    RingPtr quotient;
    RingHom onto;  // canonical epimorphism
};

// R/rad R; quotient elements are radical cosets ordered by least member.
QuotientResult quotient_by_radical(const RingPtr& ring);

// Simple-factor signature [(m, q)...] of a semisimple ring: one entry per
// Wedderburn factor, the m x m matrices over GF(q); sorted by (m, q).
// Requires a zero radical.
std::vector<std::pair<int, long long>> wedderburn_signature(const RingTable& ring);

// Nilpotency exponent: least n with (rad R)^n = {0}.
int radical_nilpotency(const RingTable& ring);

// All left ideals of tiny rings by subset closure; test oracle support.
std::vector<std::vector<int>> left_ideals(const RingTable& ring);

}  // namespace ringline

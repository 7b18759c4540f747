#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ringline/numbers.hpp"

namespace ringline {

// A block structure on points 0..v-1 with an equivalence partition into
// classes.  Classes are ordered by least member; blocks are sorted id vectors
// in lexicographic order.  `t` is the declared design level.
struct Design {
    int v = 0;
    int t = 0;
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<int>> blocks;
};

struct DesignParams {
    int t = 0;
    long long v = 0;
    long long s = 0;         // class size
    long long k = 0;         // block size
    long long lambda_t = 0;
    long long b = 0;         // block count
    long long r = 0;         // blocks through a point
    bool transversal = false;  // k = v/s
};

struct Violation {
    char axiom;  // 'A', 'B', 'C', 'D'
    int level = 0;  // for 'C': the subset size at which counts disagree
    std::string message;
    std::vector<int> witness_points;
    std::vector<long long> counts;
};

struct VerifyResult {
    bool ok = false;
    DesignParams params;
    std::vector<Violation> violations;
};

// Full axiom check at level t: blocks are class-transversal k-sets (A),
// classes share one size (B), block counts over transversal i-sets are
// constant for every 1 <= i <= t with the level-i value matching the closed
// form derived from level t (C), and t is at most the class count (D).  All
// violations are collected, each with a lexicographically least witness.
// Throws CapError if more than enum_cap subsets would be enumerated, and
// std::invalid_argument on malformed input (bad partition, duplicate blocks).
VerifyResult verify_dd(const Design& design, int t, long long enum_cap = 10000000);

// lambda_i = lambda_t * C(v/s - i, t - i) * s^(t-i) / C(k - i, t - i).
// Exact; integrality is a property of certified designs, not of the formula.
Rat derive_lambda_i(const DesignParams& params, int i);

// Largest level at which the design certifies (0 if none).
int max_certified_t(const Design& design, long long enum_cap = 10000000);

// Point bijection mapping classes onto classes and blocks onto blocks, with
// the block condition checked in both directions; nullopt if none exists.
// Guarded to v <= 64 points.
std::optional<std::vector<int>> dd_isomorphic(const Design& a, const Design& b);

// Spera's orbit construction over an abstract permutation group: blocks are
// the orbit of a transversal base block.  The hypotheses (equivariance of the
// partition, equal class sizes, transitivity on transversal t-sets) are
// checked explicitly; the transitivity check may be waived by the caller when
// a transitivity theorem applies to its situation.
struct SperaInput {
    int v = 0;
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<int>> generators;  // point permutations
    std::vector<int> base_block;
    int t = 0;
    std::optional<Int> group_order;  // enables the stabiliser lambda route
    bool assume_transversal_transitivity = false;
    long long orbit_cap = 1000000;
    long long enum_cap = 10000000;
};

struct SperaRoutes {
    Rat direct;          // counted through a transversal t-set
    Rat via_block_count; // b * C(k,t) / (C(v/s,t) * s^t)
    std::optional<Rat> via_stabiliser;  // (|G| / |G_B|) * C(k,t) / (C(v/s,t) * s^t)
};

struct SperaOutcome {
    bool ok = false;
    std::string rejected_hypothesis;  // empty when ok
    std::string message;
    std::vector<int> witness_points;
    std::vector<long long> witness_counts;
    Design design;
    VerifyResult certification;
    std::optional<Int> stabiliser;
    std::optional<SperaRoutes> lambda_routes;
};

SperaOutcome spera_construct(const SperaInput& input);

// Text format: optional `chain-geometry ...` line, `dd v=<n> t=<t>` header,
// `classes` section (one strictly increasing id line per class), `blocks`
// section (one strictly increasing id line per block).  '#' starts a comment.
// Classes must partition the points; duplicate blocks are rejected.  Classes
// and blocks are normalised to lexicographic order on read.
Design read_design(std::istream& in);
Design read_design_file(const std::string& path);
void write_design(std::ostream& out, const Design& design, const std::string& extra_header = "");
void write_design_file(const std::string& path, const Design& design,
                       const std::string& extra_header = "");

}  // namespace ringline

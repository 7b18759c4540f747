#pragma once

#include <utility>
#include <vector>

#include "ringline/bits.hpp"
#include "ringline/numbers.hpp"
#include "ringline/ring.hpp"

namespace ringline {

// The projective line over a finite ring: points are the unit-orbit classes
// R(a,b) of admissible pairs, identified by the lexicographically least orbit
// member.  `distant` is the symmetric invertibility relation on point pairs;
// parallel classes are the fibres of the reduction mod rad R.
struct ProjLine {
    RingPtr ring;
    std::vector<std::pair<int, int>> points;  // canonical reps, ascending
    BitMatrix distant;
    std::vector<int> class_of;                // point -> parallel class id
    std::vector<std::vector<int>> classes;    // ordered by least member

    int point_count() const { return static_cast<int>(points.size()); }
    // Id of the point with the given canonical representative, -1 if absent.
    int id_of_rep(std::pair<int, int> rep) const;
};

// (a,b) is unimodular when ax + by = 1 is solvable.  Single-query form; the
// line builder batches this with per-element ideal bitsets.
bool is_unimodular(const RingTable& ring, int a, int b);

// Admissible coincides with unimodular over finite rings; for rings of order
// <= 16 this additionally searches for a completing invertible matrix and
// insists the two answers agree.
bool is_admissible(const RingTable& ring, int a, int b);

long long admissible_pair_count(const RingTable& ring);

// Least element of { (ua, ub) : u a unit } in index order; requires an
// admissible pair.
std::pair<int, int> canonical_point(const RingTable& ring, int a, int b);

ProjLine build_line(RingPtr ring);

inline bool distant(const ProjLine& line, int p, int q) { return line.distant.get(p, q); }

// Radical parallelism via class ids; build_line verifies the definitional
// characterisation (distant neighbourhoods agree) on lines up to 2000 points.
inline bool parallel(const ProjLine& line, int p, int q) {
    return line.class_of[p] == line.class_of[q];
}

// True when the complement of the distant relation is transitive (and hence an
// equivalence, since it is reflexive and symmetric).
bool nondistant_is_equivalence(const ProjLine& line);

// Closed-form |P(R)| = |rad R| * prod over Wedderburn factors (m, q) of
// prod_{i<m} (q^{2m-i}-1)/(q^{m-i}-1), evaluated exactly.
Int count_points(const RingPtr& ring);

Int matrix_line_size(long long q, int m);  // the inner product above

}  // namespace ringline

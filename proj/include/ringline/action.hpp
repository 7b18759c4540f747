#pragma once

#include <utility>
#include <vector>

#include "ringline/numbers.hpp"
#include "ringline/projline.hpp"
#include "ringline/ring.hpp"

namespace ringline {

// 2x2 matrix over a ring, row-major; points transform as row vectors,
// (a, b) -> (a, b) * g.
struct Mat2 {
    int a, b, c, d;
};

bool matrix_invertible(const RingTable& ring, const Mat2& m);
Mat2 mat_mul(const RingTable& ring, const Mat2& x, const Mat2& y);
Mat2 mat_inverse(const RingTable& ring, const Mat2& m);

// Elementary transvections E12(x), E21(x) for every x, then diag(u,1) and
// diag(1,u) for every unit u; generates GL2 over the rings handled here
// (verified exhaustively in tests for small orders).
std::vector<Mat2> gl2_generators(const RingTable& ring);

// Image of a point under right multiplication, as a canonical representative.
std::pair<int, int> apply_to_rep(const RingTable& ring, std::pair<int, int> rep, const Mat2& g);

// The permutation a matrix induces on line points; validates invertibility.
std::vector<int> point_permutation(const ProjLine& line, const Mat2& g);

// |GL2(R)| = |rad R|^4 * prod |GL_{2m}(q)| over the Wedderburn factors of
// R/rad R.
Int gl2_order(const RingPtr& ring);
Int gln_order(long long q, int n);

// Brute-force |GL2(R)| by testing all |R|^4 matrices; rings of order <= 16.
long long gl2_order_exhaustive(const RingTable& ring);

// Union of orbits of the seed blocks under the generated permutation group.
// Blocks are sorted id vectors; the result is sorted lexicographically and is
// independent of the choice of seeds within their orbits.  Throws CapError
// when more than `cap` blocks appear.
std::vector<std::vector<int>> orbit_blocks(const std::vector<std::vector<int>>& seeds,
                                           const std::vector<std::vector<int>>& generators,
                                           long long cap = 1000000);

// Orbit-stabiliser arithmetic; insists the orbit size divides group_order.
Int stabiliser_order(const std::vector<int>& block,
                     const std::vector<std::vector<int>>& generators, const Int& group_order,
                     long long cap = 1000000);

// Orbit of one mutually-distant ordered triple must reach all of them.
bool check_3_transitivity(const ProjLine& line, const std::vector<std::vector<int>>& generators);

long long distant_ordered_triple_count(const ProjLine& line);

// Matrices of the subgroup generated by `gens` (closure under product);
// exhaustive-scale helper for cross-checks.
long long generated_matrix_group_order(const RingTable& ring, const std::vector<Mat2>& gens,
                                       long long cap = 2000000);

}  // namespace ringline

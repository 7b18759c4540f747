#pragma once

// Reference implementations used to cross-check derived ring and line
// structure.  Everything here follows the most literal definition available,
// shares no code with the library paths it checks, and is only meant for
// small rings.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "ringline/ring.hpp"

namespace oracles {

// Left ideal generated by a seed set: close under addition and left
// multiplication by arbitrary ring elements.
inline std::vector<int> left_ideal_closure(const ringline::RingTable& ring,
                                           const std::vector<int>& seed) {
    std::vector<char> in(ring.order, 0);
    in[ring.zero] = 1;
    std::vector<int> work{ring.zero};
    for (int s : seed)
        if (!in[s]) { in[s] = 1; work.push_back(s); }
    for (size_t i = 0; i < work.size(); ++i) {
        int x = work[i];
        for (int r = 0; r < ring.order; ++r) {
            int y = ring.mul(r, x);
            if (!in[y]) { in[y] = 1; work.push_back(y); }
        }
        // sums with later elements are closed when their own index comes up
        for (size_t j = 0; j <= i; ++j) {
            int y = ring.add(x, work[j]);
            if (!in[y]) { in[y] = 1; work.push_back(y); }
        }
    }
    std::vector<int> out;
    for (int x = 0; x < ring.order; ++x)
        if (in[x]) out.push_back(x);
    return out;
}

// Every left ideal is a sum of cyclic ones, so iterating pairwise sums of the
// cyclic ideals to a fixpoint enumerates them all.
inline std::vector<std::vector<int>> all_left_ideals(const ringline::RingTable& ring) {
    std::set<std::vector<int>> ideals;
    for (int a = 0; a < ring.order; ++a) ideals.insert(left_ideal_closure(ring, {a}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(ideals.begin(), ideals.end());
        for (size_t i = 0; i < snapshot.size(); ++i)
            for (size_t j = i + 1; j < snapshot.size(); ++j) {
                std::vector<int> seed = snapshot[i];
                seed.insert(seed.end(), snapshot[j].begin(), snapshot[j].end());
                if (ideals.insert(left_ideal_closure(ring, seed)).second) grew = true;
            }
    }
    return {ideals.begin(), ideals.end()};
}

// Jacobson radical as the intersection of all maximal left ideals.
inline std::vector<int> radical_by_maximal_ideals(const ringline::RingTable& ring) {
    auto ideals = all_left_ideals(ring);
    std::vector<std::vector<int>> proper;
    for (const auto& ideal : ideals)
        if (static_cast<int>(ideal.size()) < ring.order) proper.push_back(ideal);
    std::vector<char> meet(ring.order, 1);
    for (const auto& cand : proper) {
        bool maximal = true;
        for (const auto& other : proper)
            if (cand.size() < other.size() &&
                std::includes(other.begin(), other.end(), cand.begin(), cand.end())) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        std::vector<char> mask(ring.order, 0);
        for (int x : cand) mask[x] = 1;
        for (int x = 0; x < ring.order; ++x) meet[x] = meet[x] && mask[x];
    }
    std::vector<int> out;
    for (int x = 0; x < ring.order; ++x)
        if (meet[x]) out.push_back(x);
    return out;
}

// Unimodularity by the definition: ax + by = 1 for some x, y.
inline bool unimodular_by_scan(const ringline::RingTable& ring, int a, int b) {
    for (int x = 0; x < ring.order; ++x)
        for (int y = 0; y < ring.order; ++y)
            if (ring.add(ring.mul(a, x), ring.mul(b, y)) == ring.one) return true;
    return false;
}

// Point count as the number of unit orbits on unimodular pairs.
inline long long point_count_by_orbits(const ringline::RingTable& ring) {
    std::set<std::pair<int, int>> reps;
    for (int a = 0; a < ring.order; ++a)
        for (int b = 0; b < ring.order; ++b) {
            if (!unimodular_by_scan(ring, a, b)) continue;
            std::pair<int, int> least{a, b};
            for (int u : ring.units)
                least = std::min(least, {ring.mul(u, a), ring.mul(u, b)});
            reps.insert(least);
        }
    return static_cast<long long>(reps.size());
}

inline long long admissible_pairs_by_scan(const ringline::RingTable& ring) {
    long long n = 0;
    for (int a = 0; a < ring.order; ++a)
        for (int b = 0; b < ring.order; ++b)
            if (unimodular_by_scan(ring, a, b)) ++n;
    return n;
}

// |GL2| by testing every matrix for bijectivity of the induced map on row
// vectors; no determinants, no inverse search.
inline long long gl2_count_by_bijectivity(const ringline::RingTable& ring) {
    const int n = ring.order;
    std::vector<char> hit(static_cast<size_t>(n) * n);
    long long count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    std::fill(hit.begin(), hit.end(), 0);
                    bool bijective = true;
                    for (int x = 0; x < n && bijective; ++x)
                        for (int y = 0; y < n; ++y) {
                            int u = ring.add(ring.mul(x, a), ring.mul(y, c));
                            int v = ring.add(ring.mul(x, b), ring.mul(y, d));
                            char& cell = hit[static_cast<size_t>(u) * n + v];
                            if (cell) { bijective = false; break; }
                            cell = 1;
                        }
                    if (bijective) ++count;
                }
    return count;
}

// Number of 2-dimensional subspaces of GF(2)^4, counted as sets of bitmask
// vectors; the projective line over the 2x2 matrices of GF(2) has one point
// per such subspace.
inline long long gf2_4_plane_count() {
    std::set<std::vector<int>> planes;
    for (int u = 1; u < 16; ++u)
        for (int v = 1; v < 16; ++v) {
            if (v == u) continue;
            std::vector<int> plane{u, v, u ^ v};
            std::sort(plane.begin(), plane.end());
            planes.insert(plane);
        }
    return static_cast<long long>(planes.size());
}

}  // namespace oracles

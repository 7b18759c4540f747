#include "ringline/projline.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ringline {

namespace {

// 2x2 matrix over the ring, row-major.
struct M2 {
    int a, b, c, d;
};

bool invertible_commutative(const RingTable& r, const M2& m) {
    return r.is_unit(r.sub(r.mul(m.a, m.d), r.mul(m.b, m.c)));
}

// Row map (x,y) -> (x,y) * m is injective iff m is invertible (the ring is
// finite, so injective, surjective and two-sided invertible coincide).
bool invertible_rowmap(const RingTable& r, const M2& m) {
    const int n = r.order;
    std::vector<char> seen(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int u = r.add(r.mul(x, m.a), r.mul(y, m.c));
            int v = r.add(r.mul(x, m.b), r.mul(y, m.d));
            size_t key = static_cast<size_t>(u) * n + v;
            if (seen[key]) return false;
            seen[key] = 1;
        }
    return true;
}

bool invertible2(const RingTable& r, const M2& m) {
    return r.commutative ? invertible_commutative(r, m) : invertible_rowmap(r, m);
}

// Per-element principal right ideal aR and the shifted set 1 - bR, as packed
// bitsets; (a,b) is unimodular iff aR meets 1 - bR.
struct UnimodularTester {
    explicit UnimodularTester(const RingTable& r) {
        const int n = r.order;
        right_ideal.assign(n, BitSet(n));
        one_minus.assign(n, BitSet(n));
        for (int a = 0; a < n; ++a)
            for (int x = 0; x < n; ++x) {
                int ax = r.mul(a, x);
                right_ideal[a].set(ax);
                one_minus[a].set(r.sub(r.one, ax));
            }
    }
    bool operator()(int a, int b) const { return right_ideal[a].intersects(one_minus[b]); }
    std::vector<BitSet> right_ideal;
    std::vector<BitSet> one_minus;
};

}  // namespace

bool is_unimodular(const RingTable& ring, int a, int b) {
    for (int x = 0; x < ring.order; ++x) {
        int ax = ring.mul(a, x);
        for (int y = 0; y < ring.order; ++y)
            if (ring.add(ax, ring.mul(b, y)) == ring.one) return true;
    }
    return false;
}

bool is_admissible(const RingTable& ring, int a, int b) {
    const bool uni = is_unimodular(ring, a, b);
    if (ring.order <= 16) {
        // Completion search: some (c,d) making rows (a,b),(c,d) invertible.
        bool completed = false;
        for (int c = 0; c < ring.order && !completed; ++c)
            for (int d = 0; d < ring.order && !completed; ++d)
                completed = invertible2(ring, M2{a, b, c, d});
        if (completed != uni)
            throw std::logic_error("admissible/unimodular disagreement at (" + ring.label(a) +
                                   "," + ring.label(b) + ")");
    }
    return uni;
}

long long admissible_pair_count(const RingTable& ring) {
    UnimodularTester uni(ring);
    long long count = 0;
    for (int a = 0; a < ring.order; ++a)
        for (int b = 0; b < ring.order; ++b)
            if (uni(a, b)) ++count;
    return count;
}

std::pair<int, int> canonical_point(const RingTable& ring, int a, int b) {
    if (!is_unimodular(ring, a, b))
        throw std::invalid_argument("pair (" + ring.label(a) + "," + ring.label(b) +
                                    ") is not admissible");
    std::pair<int, int> best{ring.order, ring.order};
    for (int u : ring.units) best = std::min(best, {ring.mul(u, a), ring.mul(u, b)});
    return best;
}

int ProjLine::id_of_rep(std::pair<int, int> rep) const {
    auto it = std::lower_bound(points.begin(), points.end(), rep);
    if (it == points.end() || *it != rep) return -1;
    return static_cast<int>(it - points.begin());
}

ProjLine build_line(RingPtr ring) {
    const RingTable& r = *ring;
    const int n = r.order;

    ProjLine line;
    line.ring = ring;

    // Sweep pairs in lexicographic order; the first unseen admissible pair of
    // each unit orbit is its canonical representative.
    UnimodularTester uni(r);
    std::vector<char> seen(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (seen[static_cast<size_t>(a) * n + b] || !uni(a, b)) continue;
            line.points.push_back({a, b});
            for (int u : r.units) {
                int ua = r.mul(u, a), ub = r.mul(u, b);
                seen[static_cast<size_t>(ua) * n + ub] = 1;
            }
        }

    const int v = line.point_count();
    line.distant = BitMatrix(v);
    for (int i = 0; i < v; ++i) {
        auto [a, b] = line.points[i];
        for (int j = 0; j < i; ++j) {
            auto [c, d] = line.points[j];
            if (invertible2(r, M2{a, b, c, d})) {
                line.distant.set(i, j);
                line.distant.set(j, i);
            }
        }
    }

    // Every neighbourhood has exactly |R| points.
    for (int i = 0; i < v; ++i)
        if (line.distant.row_count(i) != n)
            throw std::logic_error("point " + std::to_string(i) + " has " +
                                   std::to_string(line.distant.row_count(i)) +
                                   " distant points, expected " + std::to_string(n));

    // Parallel classes: fibres of the reduction mod rad R, keyed by canonical
    // representatives over the quotient.
    QuotientResult q = quotient_by_radical(ring);
    const RingTable& qr = *q.quotient;
    std::map<std::pair<int, int>, int> class_ids;
    line.class_of.assign(v, -1);
    for (int i = 0; i < v; ++i) {
        auto [a, b] = line.points[i];
        auto key = canonical_point(qr, q.onto.map[a], q.onto.map[b]);
        auto [it, inserted] = class_ids.insert({key, static_cast<int>(line.classes.size())});
        if (inserted) line.classes.push_back({});
        line.class_of[i] = it->second;
        line.classes[it->second].push_back(i);
    }

    // Classes have |rad R| points each, and parallelism must coincide with the
    // definitional test: p and q are parallel iff their distant neighbourhoods
    // are equal.  Verified on desk-size lines.
    const size_t rad = r.radical.size();
    for (const auto& cls : line.classes)
        if (cls.size() != rad)
            throw std::logic_error("parallel class size " + std::to_string(cls.size()) +
                                   " differs from |rad R| = " + std::to_string(rad));
    if (v <= 2000) {
        for (int i = 0; i < v; ++i)
            for (int j = 0; j < v; ++j) {
                bool same_class = line.class_of[i] == line.class_of[j];
                if (same_class != line.distant.rows_equal(i, j))
                    throw std::logic_error("parallelism disagrees with the definitional test at (" +
                                           std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
    return line;
}

bool nondistant_is_equivalence(const ProjLine& line) {
    // Reflexive and symmetric by construction; transitivity holds exactly when
    // non-distant points always have identical distant neighbourhoods.
    const int v = line.point_count();
    for (int p = 0; p < v; ++p)
        for (int q = 0; q < v; ++q)
            if (!line.distant.get(p, q) && !line.distant.rows_equal(p, q)) return false;
    return true;
}

Int matrix_line_size(long long q, int m) {
    Int num = 1, den = 1;
    for (int i = 0; i < m; ++i) {
        num *= int_pow(q, static_cast<unsigned>(2 * m - i)) - 1;
        den *= int_pow(q, static_cast<unsigned>(m - i)) - 1;
    }
    if (num % den != 0) throw std::logic_error("point count formula is not integral");
    return num / den;
}

Int count_points(const RingPtr& ring) {
    QuotientResult q = quotient_by_radical(ring);
    Int total = static_cast<long long>(ring->radical.size());
    for (auto [m, qq] : wedderburn_signature(*q.quotient)) total *= matrix_line_size(qq, m);
    return total;
}

}  // namespace ringline

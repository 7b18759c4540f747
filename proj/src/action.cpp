#include "ringline/action.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "ringline/errors.hpp"
#include "ringline/hash.hpp"

namespace ringline {

bool matrix_invertible(const RingTable& r, const Mat2& m) {
    if (r.commutative) return r.is_unit(r.sub(r.mul(m.a, m.d), r.mul(m.b, m.c)));
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

Mat2 mat_mul(const RingTable& r, const Mat2& x, const Mat2& y) {
    return Mat2{r.add(r.mul(x.a, y.a), r.mul(x.b, y.c)), r.add(r.mul(x.a, y.b), r.mul(x.b, y.d)),
                r.add(r.mul(x.c, y.a), r.mul(x.d, y.c)), r.add(r.mul(x.c, y.b), r.mul(x.d, y.d))};
}

Mat2 mat_inverse(const RingTable& r, const Mat2& m) {
    if (r.commutative) {
        int det = r.sub(r.mul(m.a, m.d), r.mul(m.b, m.c));
        if (!r.is_unit(det)) throw std::invalid_argument("matrix is not invertible");
        int di = r.inv(det);
        return Mat2{r.mul(di, m.d), r.mul(di, r.neg(m.b)), r.mul(di, r.neg(m.c)), r.mul(di, m.a)};
    }
    // Solve rows of X * m = I by exhausting row vectors.
    const int n = r.order;
    Mat2 out{-1, -1, -1, -1};
    bool got0 = false, got1 = false;
    for (int x = 0; x < n && !(got0 && got1); ++x)
        for (int y = 0; y < n && !(got0 && got1); ++y) {
            int u = r.add(r.mul(x, m.a), r.mul(y, m.c));
            int v = r.add(r.mul(x, m.b), r.mul(y, m.d));
            if (!got0 && u == r.one && v == r.zero) { out.a = x; out.b = y; got0 = true; }
            if (!got1 && u == r.zero && v == r.one) { out.c = x; out.d = y; got1 = true; }
        }
    if (!(got0 && got1)) throw std::invalid_argument("matrix is not invertible");
    Mat2 check = mat_mul(r, m, out);
    if (check.a != r.one || check.b != r.zero || check.c != r.zero || check.d != r.one)
        throw std::logic_error("left inverse is not a right inverse");
    return out;
}

std::vector<Mat2> gl2_generators(const RingTable& r) {
    std::vector<Mat2> gens;
    for (int x = 0; x < r.order; ++x) {
        gens.push_back(Mat2{r.one, x, r.zero, r.one});  // E12(x)
        gens.push_back(Mat2{r.one, r.zero, x, r.one});  // E21(x)
    }
    for (int u : r.units) {
        gens.push_back(Mat2{u, r.zero, r.zero, r.one});  // diag(u, 1)
        gens.push_back(Mat2{r.one, r.zero, r.zero, u});  // diag(1, u)
    }
    return gens;
}

std::pair<int, int> apply_to_rep(const RingTable& r, std::pair<int, int> rep, const Mat2& g) {
    auto [a, b] = rep;
    int u = r.add(r.mul(a, g.a), r.mul(b, g.c));
    int v = r.add(r.mul(a, g.b), r.mul(b, g.d));
    return canonical_point(r, u, v);
}

std::vector<int> point_permutation(const ProjLine& line, const Mat2& g) {
    const RingTable& r = *line.ring;
    if (!matrix_invertible(r, g)) throw std::invalid_argument("matrix is not invertible");
    std::vector<int> perm(line.point_count());
    std::vector<char> hit(line.point_count(), 0);
    for (int i = 0; i < line.point_count(); ++i) {
        int j = line.id_of_rep(apply_to_rep(r, line.points[i], g));
        if (j < 0) throw std::logic_error("image of a point left the line");
        perm[i] = j;
        hit[j] = 1;
    }
    for (char h : hit)
        if (!h) throw std::logic_error("matrix did not permute the line");
    return perm;
}

Int gln_order(long long q, int n) {
    Int qn = int_pow(q, static_cast<unsigned>(n));
    Int total = 1;
    for (int i = 0; i < n; ++i) total *= qn - int_pow(q, static_cast<unsigned>(i));
    return total;
}

Int gl2_order(const RingPtr& ring) {
    QuotientResult q = quotient_by_radical(ring);
    Int total = int_pow(static_cast<long long>(ring->radical.size()), 4);
    for (auto [m, qq] : wedderburn_signature(*q.quotient)) total *= gln_order(qq, 2 * m);
    return total;
}

long long gl2_order_exhaustive(const RingTable& ring) {
    if (ring.order > 16) throw std::invalid_argument("exhaustive GL2 count is limited to order 16");
    long long count = 0;
    for (int a = 0; a < ring.order; ++a)
        for (int b = 0; b < ring.order; ++b)
            for (int c = 0; c < ring.order; ++c)
                for (int d = 0; d < ring.order; ++d)
                    if (matrix_invertible(ring, Mat2{a, b, c, d})) ++count;
    return count;
}

std::vector<std::vector<int>> orbit_blocks(const std::vector<std::vector<int>>& seeds,
                                           const std::vector<std::vector<int>>& generators,
                                           long long cap) {
    std::unordered_set<std::vector<int>, VecHash> visited;
    std::deque<std::vector<int>> frontier;
    for (const auto& s : seeds) {
        std::vector<int> key = s;
        std::sort(key.begin(), key.end());
        if (visited.insert(key).second) frontier.push_back(std::move(key));
    }
    while (!frontier.empty()) {
        std::vector<int> block = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            std::vector<int> image(block.size());
            for (size_t i = 0; i < block.size(); ++i) image[i] = g[block[i]];
            std::sort(image.begin(), image.end());
            if (visited.insert(image).second) {
                if (static_cast<long long>(visited.size()) > cap)
                    throw CapError("orbit exceeded cap of " + std::to_string(cap) + " blocks");
                frontier.push_back(std::move(image));
            }
        }
    }
    std::vector<std::vector<int>> out(visited.begin(), visited.end());
    std::sort(out.begin(), out.end());
    return out;
}

Int stabiliser_order(const std::vector<int>& block,
                     const std::vector<std::vector<int>>& generators, const Int& group_order,
                     long long cap) {
    auto orbit = orbit_blocks({block}, generators, cap);
    Int orbit_size = static_cast<long long>(orbit.size());
    if (group_order % orbit_size != 0)
        throw std::logic_error("orbit size " + orbit_size.str() + " does not divide group order " +
                               group_order.str());
    return group_order / orbit_size;
}

long long distant_ordered_triple_count(const ProjLine& line) {
    const int v = line.point_count();
    long long total = 0;
    for (int p = 0; p < v; ++p)
        for (int q = 0; q < v; ++q)
            if (line.distant.get(p, q)) total += line.distant.intersect_count(p, q);
    return total;
}

bool check_3_transitivity(const ProjLine& line, const std::vector<std::vector<int>>& generators) {
    const long long v = line.point_count();
    const long long expected = distant_ordered_triple_count(line);
    if (expected > 5000000) throw CapError("too many distant triples for the transitivity check");
    if (expected == 0) return false;

    // Base triple: canonical images of R(1,0), R(0,1), R(1,1).
    const RingTable& r = *line.ring;
    long long p0 = line.id_of_rep(canonical_point(r, r.one, r.zero));
    long long p1 = line.id_of_rep(canonical_point(r, r.zero, r.one));
    long long p2 = line.id_of_rep(canonical_point(r, r.one, r.one));
    auto encode = [v](long long x, long long y, long long z) { return (x * v + y) * v + z; };

    std::unordered_set<long long> visited;
    std::deque<long long> frontier;
    visited.insert(encode(p0, p1, p2));
    frontier.push_back(encode(p0, p1, p2));
    while (!frontier.empty()) {
        long long t = frontier.front();
        frontier.pop_front();
        long long z = t % v, y = (t / v) % v, x = t / (v * v);
        for (const auto& g : generators) {
            long long key = encode(g[x], g[y], g[z]);
            if (visited.insert(key).second) frontier.push_back(key);
        }
    }
    return static_cast<long long>(visited.size()) == expected;
}

long long generated_matrix_group_order(const RingTable& ring, const std::vector<Mat2>& gens,
                                       long long cap) {
    const long long n = ring.order;
    auto encode = [n](const Mat2& m) { return ((m.a * n + m.b) * n + m.c) * n + m.d; };
    std::unordered_set<long long> visited;
    std::deque<Mat2> frontier;
    Mat2 id{ring.one, ring.zero, ring.zero, ring.one};
    visited.insert(encode(id));
    frontier.push_back(id);
    while (!frontier.empty()) {
        Mat2 m = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
            Mat2 prod = mat_mul(ring, m, g);
            if (visited.insert(encode(prod)).second) {
                if (static_cast<long long>(visited.size()) > cap)
                    throw CapError("matrix group closure exceeded cap");
                frontier.push_back(prod);
            }
        }
    }
    return static_cast<long long>(visited.size());
}

}  // namespace ringline

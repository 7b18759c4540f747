#include "ringline/ring.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ringline/errors.hpp"

namespace ringline {

namespace {

constexpr std::uint32_t kAxiomSampleSeed = 0x52494e47;  // stable across runs
constexpr int kExhaustiveAxiomLimit = 256;
constexpr int kAxiomSamples = 10000;

size_t at(int order, int a, int b) { return static_cast<size_t>(a) * order + b; }

// ---------------------------------------------------------------------------
// Axiom checking and metadata derivation
// ---------------------------------------------------------------------------

void check_axiom_triples(const RingTable& r, bool exhaustive) {
    const int n = r.order;
    auto triple = [&](int a, int b, int c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
            throw std::invalid_argument("addition not associative at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
            throw std::invalid_argument("multiplication not associative at (" + std::to_string(a) +
                                        "," + std::to_string(b) + "," + std::to_string(c) + ")");
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
            throw std::invalid_argument("left distributivity fails at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
            throw std::invalid_argument("right distributivity fails at (" + std::to_string(a) +
                                        "," + std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (exhaustive || n <= kExhaustiveAxiomLimit) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) triple(a, b, c);
    } else {
        std::mt19937 gen(kAxiomSampleSeed);
        for (int i = 0; i < kAxiomSamples; ++i) {
            int a = static_cast<int>(gen() % n);
            int b = static_cast<int>(gen() % n);
            int c = static_cast<int>(gen() % n);
            triple(a, b, c);
        }
    }
}

// Fills zero/one/neg/units/inv/radical/commutative/local/characteristic and
// validates the ring axioms.  `exhaustive` forces full triple checking.
void finalize_ring(RingTable& r, bool exhaustive) {
    const int n = r.order;
    if (n < 2) throw std::invalid_argument("ring must have at least two elements");
    if (r.labels.empty()) {
        r.labels.resize(n);
        for (int i = 0; i < n; ++i) r.labels[i] = std::to_string(i);
    }

    // Additive identity, commutativity of +, negation.
    int zero = -1;
    for (int z = 0; z < n; ++z) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (r.add(z, a) != a) { ok = false; break; }
        if (ok) {
            if (zero >= 0) throw std::invalid_argument("two additive identities");
            zero = z;
        }
    }
    if (zero < 0) throw std::invalid_argument("no additive identity");
    r.zero = zero;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < a; ++b)
            if (r.add(a, b) != r.add(b, a))
                throw std::invalid_argument("addition not commutative at (" + std::to_string(a) +
                                            "," + std::to_string(b) + ")");
    r.neg_table.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (r.add(a, b) == zero) { r.neg_table[a] = b; break; }
        if (r.neg_table[a] < 0)
            throw std::invalid_argument("element " + std::to_string(a) + " has no negative");
    }

    // Multiplicative identity.
    int one = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (r.mul(e, a) != a || r.mul(a, e) != a) { ok = false; break; }
        if (ok) {
            if (one >= 0) throw std::invalid_argument("two multiplicative identities");
            one = e;
        }
    }
    if (one < 0) throw std::invalid_argument("no multiplicative identity");
    if (one == zero) throw std::invalid_argument("zero ring (1 = 0) is excluded");
    r.one = one;

    check_axiom_triples(r, exhaustive);

    r.commutative = true;
    for (int a = 0; a < n && r.commutative; ++a)
        for (int b = 0; b < a; ++b)
            if (r.mul(a, b) != r.mul(b, a)) { r.commutative = false; break; }

    // Units with two-sided inverses.  For an associative finite ring a one-
    // sided inverse is automatically two-sided; we witness that here.
    r.inv_table.assign(n, -1);
    r.unit_mask.assign(n, 0);
    r.units.clear();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (r.mul(a, b) == one) {
                if (r.mul(b, a) != one)
                    throw std::invalid_argument("one-sided inverse: " + std::to_string(a) + "*" +
                                                std::to_string(b) + "=1 but not conversely");
                if (r.inv_table[a] >= 0)
                    throw std::invalid_argument("element " + std::to_string(a) +
                                                " has two inverses");
                r.inv_table[a] = b;
            }
        }
        if (r.inv_table[a] >= 0) {
            r.unit_mask[a] = 1;
            r.units.push_back(a);
        }
    }

    // rad R = { b : 1 - a*b is a unit for every a }.
    r.rad_mask.assign(n, 0);
    r.radical.clear();
    for (int b = 0; b < n; ++b) {
        bool in = true;
        for (int a = 0; a < n; ++a) {
            if (!r.unit_mask[r.sub(one, r.mul(a, b))]) { in = false; break; }
        }
        if (in) {
            r.rad_mask[b] = 1;
            r.radical.push_back(b);
        }
    }
    // The radical is a two-sided ideal; verify on the computed set.
    for (int x : r.radical) {
        for (int y : r.radical)
            if (!r.rad_mask[r.add(x, y)])
                throw std::logic_error("radical not closed under addition");
        for (int a = 0; a < n; ++a)
            if (!r.rad_mask[r.mul(a, x)] || !r.rad_mask[r.mul(x, a)])
                throw std::logic_error("radical not an ideal");
    }

    r.local_ring = (n - static_cast<int>(r.units.size()) == static_cast<int>(r.radical.size()));

    r.characteristic = 1;
    for (int x = one; x != zero; x = r.add(x, one)) ++r.characteristic;
}

// ---------------------------------------------------------------------------
// GF(p^d) polynomial arithmetic over the prime field
// ---------------------------------------------------------------------------

using Poly = std::vector<int>;  // coefficients mod p, constant term first

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mul(const Poly& f, const Poly& g, long long p) {
    if (f.empty() || g.empty()) return {};
    Poly h(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            h[i + j] = static_cast<int>((h[i + j] + static_cast<long long>(f[i]) * g[j]) % p);
    return poly_trim(std::move(h));
}

// Remainder of f by monic g.
Poly poly_mod(Poly f, const Poly& g, long long p) {
    f = poly_trim(std::move(f));
    const size_t dg = g.size() - 1;
    while (f.size() > dg) {
        int c = f.back();
        size_t shift = f.size() - 1 - dg;
        for (size_t i = 0; i < g.size(); ++i) {
            long long v = f[shift + i] - static_cast<long long>(c) * g[i] % p;
            f[shift + i] = static_cast<int>(((v % p) + p) % p);
        }
        f = poly_trim(std::move(f));
    }
    return f;
}

bool poly_irreducible(const Poly& f, long long p) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1) return false;
    if (d == 1) return true;
    // Trial division by all monic polynomials of degree 1..d/2.
    for (int dd = 1; dd <= d / 2; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long k = 0; k < count; ++k) {
            Poly g(dd + 1, 0);
            long long v = k;
            for (int i = 0; i < dd; ++i) { g[i] = static_cast<int>(v % p); v /= p; }
            g[dd] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Poly least_irreducible(long long p, int d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long k = 0; k < count; ++k) {
        Poly f(d + 1, 0);
        long long v = k;
        for (int i = 0; i < d; ++i) { f[i] = static_cast<int>(v % p); v /= p; }
        f[d] = 1;
        if (poly_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

std::string gf_label(long long index, long long p) {
    if (index == 0) return "0";
    std::ostringstream out;
    bool first = true;
    int deg = 0;
    std::vector<std::pair<int, int>> terms;  // (degree, coefficient)
    for (long long v = index; v > 0; v /= p, ++deg)
        if (v % p) terms.push_back({deg, static_cast<int>(v % p)});
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        auto [dg, c] = *it;
        if (!first) out << "+";
        first = false;
        if (dg == 0) out << c;
        else {
            if (c != 1) out << c;
            out << "t";
            if (dg > 1) out << "^" << dg;
        }
    }
    return out.str();
}

RingPtr build_gf(long long q, bool exhaustive);

RingPtr build_zmod(long long m, bool exhaustive) {
    auto r = std::make_shared<RingTable>();
    r->spec = "Z/" + std::to_string(m);
    r->order = static_cast<int>(m);
    r->add_table.resize(m * m);
    r->mul_table.resize(m * m);
    r->labels.resize(m);
    for (long long a = 0; a < m; ++a) {
        r->labels[a] = std::to_string(a);
        for (long long b = 0; b < m; ++b) {
            r->add_table[at(r->order, a, b)] = static_cast<std::uint16_t>((a + b) % m);
            r->mul_table[at(r->order, a, b)] = static_cast<std::uint16_t>((a * b) % m);
        }
    }
    finalize_ring(*r, exhaustive);
    return r;
}

RingPtr build_gf(long long q, bool exhaustive) {
    long long p;
    int d;
    if (!prime_power(q, p, d)) throw std::invalid_argument("GF order must be a prime power");

    auto r = std::make_shared<RingTable>();
    r->spec = "GF(" + std::to_string(q) + ")";
    r->order = static_cast<int>(q);
    r->gf = GfInfo{p, d, least_irreducible(p, d)};
    const Poly& f = r->gf->modulus;

    // Element index <-> coefficient vector, constant term as least significant
    // base-p digit.
    std::vector<Poly> digits(q);
    for (long long i = 0; i < q; ++i) {
        Poly e;
        for (long long v = i; v > 0; v /= p) e.push_back(static_cast<int>(v % p));
        digits[i] = std::move(e);
    }
    auto encode = [&](const Poly& e) {
        long long idx = 0;
        for (size_t i = e.size(); i-- > 0;) idx = idx * p + e[i];
        return idx;
    };

    r->add_table.resize(q * q);
    for (long long a = 0; a < q; ++a) {
        for (long long b = 0; b < q; ++b) {
            Poly s(std::max(digits[a].size(), digits[b].size()), 0);
            for (size_t i = 0; i < s.size(); ++i) {
                int va = i < digits[a].size() ? digits[a][i] : 0;
                int vb = i < digits[b].size() ? digits[b][i] : 0;
                s[i] = (va + vb) % static_cast<int>(p);
            }
            r->add_table[at(r->order, a, b)] = static_cast<std::uint16_t>(encode(s));
        }
    }

    auto field_mul = [&](long long a, long long b) {
        return encode(poly_mod(poly_mul(digits[a], digits[b], p), f, p));
    };

    // Multiplication via discrete logs on a generator of the cyclic unit group.
    long long gen = -1;
    std::vector<long long> exp_of;
    for (long long g = 1; g < q && gen < 0; ++g) {
        exp_of.clear();
        long long x = 1;
        do {
            exp_of.push_back(x);
            x = field_mul(x, g);
        } while (x != 1 && static_cast<long long>(exp_of.size()) <= q);
        if (static_cast<long long>(exp_of.size()) == q - 1) gen = g;
    }
    if (gen < 0) throw std::logic_error("no multiplicative generator found");
    std::vector<long long> log_of(q, -1);
    for (long long i = 0; i < q - 1; ++i) log_of[exp_of[i]] = i;

    r->mul_table.resize(q * q);
    for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b)
            r->mul_table[at(r->order, a, b)] =
                (a == 0 || b == 0)
                    ? static_cast<std::uint16_t>(0)
                    : static_cast<std::uint16_t>(exp_of[(log_of[a] + log_of[b]) % (q - 1)]);

    r->labels.resize(q);
    for (long long i = 0; i < q; ++i) r->labels[i] = gf_label(i, p);

    finalize_ring(*r, exhaustive);

    if (d > 1) {
        auto prime = build_gf(p, exhaustive);
        r->base = prime;
        r->base_embedding.resize(p);
        for (long long c = 0; c < p; ++c) r->base_embedding[c] = static_cast<int>(c);
    }
    return r;
}

std::string coeff_term(const std::string& label, const std::string& symbol) {
    if (label == "1") return symbol;
    if (label.find_first_of("+-") != std::string::npos) return "(" + label + ")" + symbol;
    return label + symbol;
}

// Truncated polynomials base[e]/(e^h) with central e; big-endian lexicographic
// index over base-coefficient tuples (c_0, ..., c_{h-1}).
RingPtr build_dual(const RingPtr& base, int h, const std::string& spec, bool exhaustive) {
    const long long bo = base->order;
    long long n = 1;
    for (int i = 0; i < h; ++i) n *= bo;
    const int order = static_cast<int>(n);

    std::vector<std::vector<int>> coeff(order, std::vector<int>(h));
    for (int i = 0; i < order; ++i) {
        long long v = i;
        for (int j = h - 1; j >= 0; --j) { coeff[i][j] = static_cast<int>(v % bo); v /= bo; }
    }
    auto encode = [&](const std::vector<int>& c) {
        long long idx = 0;
        for (int j = 0; j < h; ++j) idx = idx * bo + c[j];
        return static_cast<int>(idx);
    };

    auto r = std::make_shared<RingTable>();
    r->spec = spec;
    r->order = order;
    r->add_table.resize(static_cast<size_t>(order) * order);
    r->mul_table.resize(static_cast<size_t>(order) * order);
    std::vector<int> acc(h);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            for (int j = 0; j < h; ++j) acc[j] = base->add(coeff[a][j], coeff[b][j]);
            r->add_table[at(order, a, b)] = static_cast<std::uint16_t>(encode(acc));
            std::fill(acc.begin(), acc.end(), base->zero);
            for (int i = 0; i < h; ++i)
                for (int j = 0; i + j < h; ++j)
                    acc[i + j] = base->add(acc[i + j], base->mul(coeff[a][i], coeff[b][j]));
            r->mul_table[at(order, a, b)] = static_cast<std::uint16_t>(encode(acc));
        }
    }

    r->labels.resize(order);
    for (int i = 0; i < order; ++i) {
        std::string s;
        for (int j = 0; j < h; ++j) {
            if (coeff[i][j] == base->zero) continue;
            std::string term;
            if (j == 0) term = base->label(coeff[i][j]);
            else {
                std::string sym = j == 1 ? "e" : "e^" + std::to_string(j);
                term = coeff_term(base->label(coeff[i][j]), sym);
            }
            if (!s.empty()) s += "+";
            s += term;
        }
        r->labels[i] = s.empty() ? "0" : s;
    }

    finalize_ring(*r, exhaustive);

    r->base = base;
    r->base_embedding.resize(bo);
    std::vector<int> c(h, base->zero);
    for (int x = 0; x < bo; ++x) { c[0] = x; r->base_embedding[x] = encode(c); }
    return r;
}

// Twisted dual numbers over GF(q): (a+be)(c+de) = ac + (ad + b sigma(c))e with
// sigma the frob-th Frobenius power.
RingPtr build_twisted_dual(const RingPtr& base, int frob, const std::string& spec,
                           bool exhaustive) {
    if (!base->gf) throw std::invalid_argument("twisted dual numbers need a Galois field base");
    const long long q = base->order;
    const long long p = base->gf->p;
    const int d = base->gf->d;
    const int j = frob % d;

    std::vector<int> sigma(q);
    for (int x = 0; x < q; ++x) sigma[x] = x;
    for (int step = 0; step < j; ++step) {
        for (int x = 0; x < q; ++x) {
            int y = base->one;
            for (long long i = 0; i < p; ++i) y = base->mul(y, sigma[x]);  // x^p, iterated
            sigma[x] = y;
        }
    }

    const int order = static_cast<int>(q * q);
    auto r = std::make_shared<RingTable>();
    r->spec = spec;
    r->order = order;
    r->add_table.resize(static_cast<size_t>(order) * order);
    r->mul_table.resize(static_cast<size_t>(order) * order);
    auto enc = [&](int hi, int lo) { return static_cast<int>(hi * q + lo); };
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int e = 0; e < q; ++e) {
                    int lhs = enc(a, b), rhs = enc(c, e);
                    r->add_table[at(order, lhs, rhs)] =
                        static_cast<std::uint16_t>(enc(base->add(a, c), base->add(b, e)));
                    int re = base->add(base->mul(a, e), base->mul(b, sigma[c]));
                    r->mul_table[at(order, lhs, rhs)] =
                        static_cast<std::uint16_t>(enc(base->mul(a, c), re));
                }

    r->labels.resize(order);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            std::string s;
            if (a != base->zero) s = base->label(a);
            if (b != base->zero) {
                if (!s.empty()) s += "+";
                s += coeff_term(base->label(b), "e");
            }
            r->labels[enc(a, b)] = s.empty() ? "0" : s;
        }

    finalize_ring(*r, exhaustive);

    r->base = base;
    r->base_embedding.resize(q);
    for (int x = 0; x < q; ++x) r->base_embedding[x] = enc(x, 0);
    return r;
}

RingPtr build_matrix_ring(const RingPtr& base, int m, const std::string& spec, bool exhaustive,
                          long long order_ll) {
    const int order = static_cast<int>(order_ll);
    const long long bo = base->order;
    const int mm = m * m;

    std::vector<std::vector<int>> entries(order, std::vector<int>(mm));
    for (int i = 0; i < order; ++i) {
        long long v = i;
        for (int pos = mm - 1; pos >= 0; --pos) { entries[i][pos] = static_cast<int>(v % bo); v /= bo; }
    }
    auto encode = [&](const std::vector<int>& e) {
        long long idx = 0;
        for (int pos = 0; pos < mm; ++pos) idx = idx * bo + e[pos];
        return static_cast<int>(idx);
    };

    auto r = std::make_shared<RingTable>();
    r->spec = spec;
    r->order = order;
    r->add_table.resize(static_cast<size_t>(order) * order);
    r->mul_table.resize(static_cast<size_t>(order) * order);
    std::vector<int> acc(mm);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            for (int pos = 0; pos < mm; ++pos) acc[pos] = base->add(entries[a][pos], entries[b][pos]);
            r->add_table[at(order, a, b)] = static_cast<std::uint16_t>(encode(acc));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    int s = base->zero;
                    for (int k = 0; k < m; ++k)
                        s = base->add(s, base->mul(entries[a][i * m + k], entries[b][k * m + j]));
                    acc[i * m + j] = s;
                }
            r->mul_table[at(order, a, b)] = static_cast<std::uint16_t>(encode(acc));
        }
    }

    r->labels.resize(order);
    for (int i = 0; i < order; ++i) {
        std::string s = "[";
        for (int row = 0; row < m; ++row) {
            if (row) s += ";";
            for (int col = 0; col < m; ++col) {
                if (col) s += ",";
                s += base->label(entries[i][row * m + col]);
            }
        }
        r->labels[i] = s + "]";
    }

    finalize_ring(*r, exhaustive);

    r->base = base;  // scalar matrices
    r->base_embedding.resize(bo);
    std::vector<int> e(mm, base->zero);
    for (int x = 0; x < bo; ++x) {
        for (int i = 0; i < m; ++i) e[i * m + i] = x;
        r->base_embedding[x] = encode(e);
    }
    return r;
}

RingPtr build_product(const std::vector<RingPtr>& parts, const std::string& spec, bool exhaustive,
                      long long order_ll) {
    const int order = static_cast<int>(order_ll);
    const int k = static_cast<int>(parts.size());

    std::vector<std::vector<int>> tup(order, std::vector<int>(k));
    for (int i = 0; i < order; ++i) {
        long long v = i;
        for (int j = k - 1; j >= 0; --j) { tup[i][j] = static_cast<int>(v % parts[j]->order); v /= parts[j]->order; }
    }
    auto encode = [&](const std::vector<int>& t) {
        long long idx = 0;
        for (int j = 0; j < k; ++j) idx = idx * parts[j]->order + t[j];
        return static_cast<int>(idx);
    };

    auto r = std::make_shared<RingTable>();
    r->spec = spec;
    r->order = order;
    r->add_table.resize(static_cast<size_t>(order) * order);
    r->mul_table.resize(static_cast<size_t>(order) * order);
    std::vector<int> acc(k);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            for (int j = 0; j < k; ++j) acc[j] = parts[j]->add(tup[a][j], tup[b][j]);
            r->add_table[at(order, a, b)] = static_cast<std::uint16_t>(encode(acc));
            for (int j = 0; j < k; ++j) acc[j] = parts[j]->mul(tup[a][j], tup[b][j]);
            r->mul_table[at(order, a, b)] = static_cast<std::uint16_t>(encode(acc));
        }

    r->labels.resize(order);
    for (int i = 0; i < order; ++i) {
        std::string s = "(";
        for (int j = 0; j < k; ++j) {
            if (j) s += ",";
            s += parts[j]->label(tup[i][j]);
        }
        r->labels[i] = s + ")";
    }

    finalize_ring(*r, exhaustive);
    return r;
}

// Exterior algebra over a field K on n generators; basis indexed by subset
// masks, b_S b_T = sign(S,T) b_{S|T} when S and T are disjoint, else 0.
RingPtr build_exterior(const RingPtr& base, int n, const std::string& spec, bool exhaustive,
                       long long order_ll) {
    if (!base->is_field() || !base->commutative)
        throw std::invalid_argument("exterior algebra needs a field of scalars");
    const int order = static_cast<int>(order_ll);
    const int nb = 1 << n;  // number of basis monomials
    const long long ko = base->order;

    std::vector<std::vector<int>> coeff(order, std::vector<int>(nb));
    for (int i = 0; i < order; ++i) {
        long long v = i;
        for (int mask = nb - 1; mask >= 0; --mask) { coeff[i][mask] = static_cast<int>(v % ko); v /= ko; }
    }
    auto encode = [&](const std::vector<int>& c) {
        long long idx = 0;
        for (int mask = 0; mask < nb; ++mask) idx = idx * ko + c[mask];
        return static_cast<int>(idx);
    };

    // sign(S,T): parity of inversions when concatenating S then T.
    std::vector<std::vector<int>> sign(nb, std::vector<int>(nb, 0));
    for (int s = 0; s < nb; ++s)
        for (int t = 0; t < nb; ++t) {
            if (s & t) { sign[s][t] = 0; continue; }
            int inv = 0;
            for (int i = 0; i < n; ++i)
                if (s & (1 << i)) inv += __builtin_popcount(t & ((1 << i) - 1));
            sign[s][t] = inv % 2 ? -1 : 1;
        }

    auto r = std::make_shared<RingTable>();
    r->spec = spec;
    r->order = order;
    r->add_table.resize(static_cast<size_t>(order) * order);
    r->mul_table.resize(static_cast<size_t>(order) * order);
    std::vector<int> acc(nb);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            for (int mask = 0; mask < nb; ++mask)
                acc[mask] = base->add(coeff[a][mask], coeff[b][mask]);
            r->add_table[at(order, a, b)] = static_cast<std::uint16_t>(encode(acc));
            std::fill(acc.begin(), acc.end(), base->zero);
            for (int s = 0; s < nb; ++s) {
                if (coeff[a][s] == base->zero) continue;
                for (int t = 0; t < nb; ++t) {
                    if (coeff[b][t] == base->zero || (s & t)) continue;
                    int term = base->mul(coeff[a][s], coeff[b][t]);
                    if (sign[s][t] < 0) term = base->neg(term);
                    acc[s | t] = base->add(acc[s | t], term);
                }
            }
            r->mul_table[at(order, a, b)] = static_cast<std::uint16_t>(encode(acc));
        }

    auto basis_label = [&](int mask) {
        if (mask == 0) return std::string("1");
        std::string s;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) {
                if (!s.empty()) s += "^";
                s += "b" + std::to_string(i + 1);
            }
        return s;
    };
    r->labels.resize(order);
    for (int i = 0; i < order; ++i) {
        std::string s;
        for (int mask = 0; mask < nb; ++mask) {
            if (coeff[i][mask] == base->zero) continue;
            std::string term;
            if (mask == 0) term = base->label(coeff[i][mask]);
            else if (coeff[i][mask] == base->one) term = basis_label(mask);
            else term = base->label(coeff[i][mask]) + "*" + basis_label(mask);
            if (!s.empty()) s += "+";
            s += term;
        }
        r->labels[i] = s.empty() ? "0" : s;
    }

    finalize_ring(*r, exhaustive);

    r->base = base;
    r->base_embedding.resize(ko);
    std::vector<int> c(nb, base->zero);
    for (int x = 0; x < ko; ++x) { c[0] = x; r->base_embedding[x] = encode(c); }
    return r;
}

// ---------------------------------------------------------------------------
// Table files
// ---------------------------------------------------------------------------

std::vector<std::string> tokenize_table_file(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

}  // namespace

RingPtr ring_from_tables(const std::string& name, int order, std::vector<int> add,
                         std::vector<int> mul, std::vector<std::string> labels, bool exhaustive) {
    if (order < 2) throw std::invalid_argument("ring order must be at least 2");
    const size_t n2 = static_cast<size_t>(order) * order;
    if (add.size() != n2 || mul.size() != n2)
        throw std::invalid_argument("operation tables must be order x order");
    auto r = std::make_shared<RingTable>();
    r->spec = name;
    r->order = order;
    r->add_table.resize(n2);
    r->mul_table.resize(n2);
    for (size_t i = 0; i < n2; ++i) {
        if (add[i] < 0 || add[i] >= order || mul[i] < 0 || mul[i] >= order)
            throw std::invalid_argument("table entry out of range");
        r->add_table[i] = static_cast<std::uint16_t>(add[i]);
        r->mul_table[i] = static_cast<std::uint16_t>(mul[i]);
    }
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != order)
            throw std::invalid_argument("label count must equal ring order");
        r->labels = std::move(labels);
    }
    finalize_ring(*r, exhaustive);
    return r;
}

RingPtr load_table_ring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open table file '" + path + "'", 1, 1);
    auto tokens = tokenize_table_file(in);
    size_t pos = 0;
    auto next = [&](const std::string& what) -> const std::string& {
        if (pos >= tokens.size()) throw ParseError("unexpected end of table file: expected " + what, 1, 1);
        return tokens[pos++];
    };
    auto next_int = [&](const std::string& what) {
        const std::string& tok = next(what);
        try {
            size_t used;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (...) {
            throw ParseError("expected " + what + ", got '" + tok + "'", 1, 1);
        }
    };

    if (next("'ring'") != "ring") throw ParseError("table file must start with 'ring <order>'", 1, 1);
    long long order = next_int("ring order");
    if (order < 2 || order > 65535) throw ParseError("ring order out of range", 1, 1);

    if (next("'labels'") != "labels") throw ParseError("expected 'labels' section", 1, 1);
    std::vector<std::string> labels;
    for (long long i = 0; i < order; ++i) {
        const std::string& tok = next("label");
        if (tok == "add" || tok == "mul") throw ParseError("too few labels", 1, 1);
        labels.push_back(tok);
    }
    std::set<std::string> uniq(labels.begin(), labels.end());
    if (static_cast<long long>(uniq.size()) != order) throw ParseError("duplicate labels", 1, 1);

    auto matrix = [&](const std::string& section) {
        if (next("'" + section + "'") != section)
            throw ParseError("expected '" + section + "' section", 1, 1);
        std::vector<int> m(order * order);
        for (long long i = 0; i < order * order; ++i) {
            long long v = next_int(section + " entry");
            if (v < 0 || v >= order) throw ParseError("table entry out of range in " + section, 1, 1);
            m[i] = static_cast<int>(v);
        }
        return m;
    };
    std::vector<int> add = matrix("add");
    std::vector<int> mul = matrix("mul");
    if (pos != tokens.size())
        throw ParseError("trailing input after mul table: '" + tokens[pos] + "'", 1, 1);

    return ring_from_tables("table(" + path + ")", static_cast<int>(order), std::move(add),
                            std::move(mul), std::move(labels), true);
}

RingPtr build_ring(const RingSpec& spec, const BuildOptions& options) {
    Int order = spec_order(spec);
    if (order > options.order_cap)
        throw CapError("ring order " + order.str() + " exceeds cap " +
                       std::to_string(options.order_cap) + " (raise RINGLINE_CAP to override)");
    const bool exhaustive = order <= kExhaustiveAxiomLimit;
    const std::string text = print_ring_spec(spec);

    switch (spec.kind) {
        case RingSpec::Kind::Zmod:
            return build_zmod(spec.n, exhaustive);
        case RingSpec::Kind::GaloisField:
            return build_gf(spec.n, exhaustive);
        case RingSpec::Kind::DualNumbers:
            return build_dual(build_ring(*spec.args[0], options), static_cast<int>(spec.n), text,
                              exhaustive);
        case RingSpec::Kind::TwistedDual:
            return build_twisted_dual(build_ring(*spec.args[0], options), spec.frob, text,
                                      exhaustive);
        case RingSpec::Kind::MatrixRing:
            return build_matrix_ring(build_ring(*spec.args[0], options), static_cast<int>(spec.n),
                                     text, exhaustive, to_ll(order));
        case RingSpec::Kind::Product: {
            std::vector<RingPtr> parts;
            for (const auto& a : spec.args) parts.push_back(build_ring(*a, options));
            return build_product(parts, text, exhaustive, to_ll(order));
        }
        case RingSpec::Kind::ExteriorAlgebra:
            return build_exterior(build_ring(*spec.args[0], options), static_cast<int>(spec.n),
                                  text, exhaustive, to_ll(order));
        case RingSpec::Kind::TableRing: {
            auto r = load_table_ring(spec.path);
            return r;
        }
    }
    throw std::logic_error("unreachable spec kind");
}

RingPtr build_ring(const std::string& spec_text, const BuildOptions& options) {
    return build_ring(*parse_ring_spec(spec_text), options);
}

bool verify_hom(const RingHom& hom) {
    const RingTable& d = *hom.domain;
    const RingTable& c = *hom.codomain;
    const std::vector<int>& f = hom.map;
    if (static_cast<int>(f.size()) != d.order) return false;
    if (f[d.zero] != c.zero || f[d.one] != c.one) return false;
    for (int a = 0; a < d.order; ++a)
        for (int b = 0; b < d.order; ++b) {
            if (f[d.add(a, b)] != c.add(f[a], f[b])) return false;
            if (f[d.mul(a, b)] != c.mul(f[a], f[b])) return false;
        }
    return true;
}

QuotientResult quotient_by_radical(const RingPtr& ring) {
    const RingTable& r = *ring;
    const int n = r.order;

    // Cosets a + rad, represented by their least member.
    std::vector<int> rep(n, -1);
    std::vector<int> reps;
    for (int a = 0; a < n; ++a) {
        if (rep[a] >= 0) continue;
        int m = a;  // a is least: any smaller member would have been visited
        reps.push_back(m);
        for (int x : r.radical) rep[r.add(a, x)] = m;
        if (rep[a] != a) throw std::logic_error("coset representative mismatch");
    }
    const int qn = static_cast<int>(reps.size());
    std::vector<int> coset_index(n, -1);
    for (int i = 0; i < qn; ++i) coset_index[reps[i]] = i;
    std::vector<int> map(n);
    for (int a = 0; a < n; ++a) map[a] = coset_index[rep[a]];

    std::vector<int> qadd(static_cast<size_t>(qn) * qn), qmul(static_cast<size_t>(qn) * qn);
    std::vector<std::string> qlabels(qn);
    for (int i = 0; i < qn; ++i) {
        qlabels[i] = r.label(reps[i]);
        for (int j = 0; j < qn; ++j) {
            qadd[static_cast<size_t>(i) * qn + j] = map[r.add(reps[i], reps[j])];
            qmul[static_cast<size_t>(i) * qn + j] = map[r.mul(reps[i], reps[j])];
        }
    }

    QuotientResult out;
    out.quotient = ring_from_tables(r.spec + " mod rad", qn, std::move(qadd), std::move(qmul),
                                    std::move(qlabels), qn <= kExhaustiveAxiomLimit);
    out.onto = RingHom{ring, out.quotient, std::move(map)};
    if (!verify_hom(out.onto)) throw std::logic_error("quotient map is not a homomorphism");
    if (out.quotient->radical.size() != 1 || out.quotient->radical[0] != out.quotient->zero)
        throw std::logic_error("quotient by radical is not semisimple");
    return out;
}

std::vector<std::pair<int, long long>> wedderburn_signature(const RingTable& ring) {
    const int n = ring.order;
    if (!(ring.radical.size() == 1 && ring.radical[0] == ring.zero))
        throw std::invalid_argument("wedderburn signature needs a semisimple ring (zero radical)");

    std::vector<int> center;
    for (int z = 0; z < n; ++z) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = ring.mul(z, x) == ring.mul(x, z);
        if (ok) center.push_back(z);
    }
    std::vector<int> ce;  // central idempotents
    for (int z : center)
        if (ring.mul(z, z) == z) ce.push_back(z);

    std::vector<int> primitive;
    for (int e : ce) {
        if (e == ring.zero) continue;
        bool prim = true;
        for (int f : ce) {
            if (f == ring.zero || f == e) continue;
            if (ring.mul(f, e) == f) { prim = false; break; }  // f <= e, so e splits
        }
        if (prim) primitive.push_back(e);
    }

    std::vector<std::pair<int, long long>> sig;
    long long total = 1;
    for (int e : primitive) {
        std::set<int> ideal, factor_center;
        for (int x = 0; x < n; ++x) ideal.insert(ring.mul(e, x));
        for (int z : center) factor_center.insert(ring.mul(e, z));
        const long long size = static_cast<long long>(ideal.size());
        const long long q = static_cast<long long>(factor_center.size());
        long long p;
        int dexp;
        if (!prime_power(q, p, dexp))
            throw std::logic_error("factor center size is not a prime power");
        int m = -1;
        long long acc = 1;
        for (int mm = 1; mm <= 8; ++mm) {
            acc = 1;
            for (int i = 0; i < mm * mm; ++i) acc *= q;
            if (acc == size) { m = mm; break; }
            if (acc > size) break;
        }
        if (m < 0) throw std::logic_error("simple factor is not a full matrix ring over its center");
        sig.push_back({m, q});
        total *= size;
    }
    if (total != n) throw std::logic_error("wedderburn factors do not exhaust the ring");
    std::sort(sig.begin(), sig.end());
    return sig;
}

int radical_nilpotency(const RingTable& ring) {
    // Power k+1 = additive closure of {a*b : a in power k, b in rad}.
    std::vector<char> cur(ring.order, 0);
    for (int x : ring.radical) cur[x] = 1;
    auto is_zero_only = [&](const std::vector<char>& s) {
        for (int x = 0; x < ring.order; ++x)
            if (s[x] && x != ring.zero) return false;
        return true;
    };
    int k = 1;
    while (!is_zero_only(cur)) {
        std::vector<char> prod(ring.order, 0);
        prod[ring.zero] = 1;
        for (int a = 0; a < ring.order; ++a) {
            if (!cur[a]) continue;
            for (int b : ring.radical) prod[ring.mul(a, b)] = 1;
        }
        // additive closure
        bool grew = true;
        while (grew) {
            grew = false;
            for (int a = 0; a < ring.order; ++a) {
                if (!prod[a]) continue;
                for (int b = 0; b < ring.order; ++b) {
                    if (!prod[b]) continue;
                    int s = ring.add(a, b);
                    if (!prod[s]) { prod[s] = 1; grew = true; }
                }
            }
        }
        cur = std::move(prod);
        ++k;
        if (k > ring.order + 1) throw std::logic_error("radical is not nilpotent");
    }
    return k;
}

std::vector<std::vector<int>> left_ideals(const RingTable& ring) {
    const int n = ring.order;
    if (n > 16) throw std::invalid_argument("left ideal enumeration is limited to order 16");
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & (1u << ring.zero))) continue;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            if (!(mask & (1u << a))) continue;
            for (int b = 0; b < n && ok; ++b) {
                if (mask & (1u << b))
                    if (!(mask & (1u << ring.add(a, b)))) ok = false;
            }
            for (int x = 0; x < n && ok; ++x)
                if (!(mask & (1u << ring.mul(x, a)))) ok = false;
        }
        if (!ok) continue;
        std::vector<int> ideal;
        for (int a = 0; a < n; ++a)
            if (mask & (1u << a)) ideal.push_back(a);
        out.push_back(std::move(ideal));
    }
    return out;
}

}  // namespace ringline

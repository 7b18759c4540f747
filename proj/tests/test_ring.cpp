#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ringline/errors.hpp"
#include "ringline/ring.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace ringline;

namespace {

const std::vector<std::string>& zoo_specs() {
    static const std::vector<std::string> specs = {
        "GF(2)",           "GF(5)",           "Z/4",         "Z/6",
        "Z/8",             "dual(GF(2),h=2)", "dual(GF(4),h=2,frob=1)",
        "mat(2,GF(2))",    "prod(GF(2),GF(3))", "ext(GF(2),n=2)",
    };
    return specs;
}

const std::vector<RingPtr>& zoo() {
    static const std::vector<RingPtr> rings = [] {
        std::vector<RingPtr> r;
        for (const auto& s : zoo_specs()) r.push_back(build_ring(s));
        return r;
    }();
    return rings;
}

struct Facts {
    long long order, characteristic, units, radical;
    bool commutative, local;
    std::vector<std::pair<int, long long>> wedderburn;  // of R/rad R
};

}  // namespace

TEST_CASE("zoo structure: order, characteristic, units, radical, factors") {
    const std::vector<Facts> expected = {
        {2, 2, 1, 1, true, true, {{1, 2}}},
        {5, 5, 4, 1, true, true, {{1, 5}}},
        {4, 4, 2, 2, true, true, {{1, 2}}},
        {6, 6, 2, 1, true, false, {{1, 2}, {1, 3}}},
        {8, 8, 4, 4, true, true, {{1, 2}}},
        {4, 2, 2, 2, true, true, {{1, 2}}},
        {16, 2, 12, 4, false, true, {{1, 4}}},
        {16, 2, 6, 1, false, false, {{2, 2}}},
        {6, 6, 2, 1, true, false, {{1, 2}, {1, 3}}},
        {16, 2, 8, 8, true, true, {{1, 2}}},
    };
    REQUIRE(zoo().size() == expected.size());
    for (size_t i = 0; i < zoo().size(); ++i) {
        const auto& ring = *zoo()[i];
        const auto& f = expected[i];
        CAPTURE(ring.spec);
        CHECK(ring.order == f.order);
        CHECK(ring.characteristic == f.characteristic);
        CHECK(static_cast<long long>(ring.units.size()) == f.units);
        CHECK(static_cast<long long>(ring.radical.size()) == f.radical);
        CHECK(ring.commutative == f.commutative);
        CHECK(ring.local_ring == f.local);
        CHECK(wedderburn_signature(*quotient_by_radical(zoo()[i]).quotient) == f.wedderburn);
    }
}

TEST_CASE("integers mod n against elementary number theory") {
    for (long long n : {4LL, 6LL, 8LL, 12LL}) {
        auto ring = build_ring("Z/" + std::to_string(n));
        CAPTURE(n);
        std::vector<int> units, rad;
        long long squarefree_part = 1;
        for (long long p = 2; p <= n; ++p) {
            bool onlysmall = true;
            for (long long d = 2; d < p; ++d)
                if (p % d == 0) onlysmall = false;
            if (onlysmall && n % p == 0) squarefree_part *= p;
        }
        for (int k = 0; k < n; ++k) {
            if (std::gcd<long long>(k, n) == 1) units.push_back(k);
            if (k % squarefree_part == 0) rad.push_back(k);
        }
        CHECK(ring->units == units);
        CHECK(ring->radical == rad);
    }
    auto z4 = build_ring("Z/4");
    CHECK(z4->units == std::vector<int>{1, 3});
    CHECK(z4->radical == std::vector<int>{0, 2});
    auto z6 = build_ring("Z/6");
    CHECK(z6->units == std::vector<int>{1, 5});
    CHECK(z6->radical == std::vector<int>{0});
}

TEST_CASE("radical equals the intersection of maximal left ideals") {
    for (const auto& ring : zoo()) {
        CAPTURE(ring->spec);
        CHECK(ring->radical == oracles::radical_by_maximal_ideals(*ring));
    }
}

TEST_CASE("left ideal enumeration agrees with the closure oracle") {
    for (const char* spec : {"Z/4", "Z/6", "dual(GF(2),h=2)", "mat(2,GF(2))"}) {
        auto ring = build_ring(spec);
        CAPTURE(spec);
        auto got = left_ideals(*ring);
        auto want = oracles::all_left_ideals(*ring);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
    // M2(GF(2)) is simple: only 0, R, and the three minimal left ideals
    auto mat = build_ring("mat(2,GF(2))");
    CHECK(left_ideals(*mat).size() == 5);
}

TEST_CASE("unit bookkeeping: two-sided inverses and Dedekind-finiteness") {
    for (const auto& ring : zoo()) {
        CAPTURE(ring->spec);
        for (int a = 0; a < ring->order; ++a) {
            if (ring->is_unit(a)) {
                int b = ring->inv(a);
                REQUIRE(b >= 0);
                CHECK(ring->mul(a, b) == ring->one);
                CHECK(ring->mul(b, a) == ring->one);
            } else {
                CHECK(ring->inv(a) == -1);
            }
        }
        // one-sided inverses are two-sided in these rings
        for (int a = 0; a < ring->order; ++a)
            for (int b = 0; b < ring->order; ++b)
                if (ring->mul(a, b) == ring->one) {
                    CHECK(ring->mul(b, a) == ring->one);
                    CHECK(ring->is_unit(a));
                }
    }
}

TEST_CASE("radical is a nilpotent two-sided ideal with the expected exponent") {
    const std::vector<std::pair<std::string, int>> exponents = {
        {"GF(2)", 1},  {"GF(5)", 1},  {"Z/4", 2},
        {"Z/6", 1},    {"Z/8", 3},    {"dual(GF(2),h=2)", 2},
        {"dual(GF(4),h=2,frob=1)", 2}, {"mat(2,GF(2))", 1},
        {"prod(GF(2),GF(3))", 1},      {"ext(GF(2),n=2)", 3},
        {"dual(GF(2),h=3)", 3},
    };
    for (const auto& [spec, exponent] : exponents) {
        auto ring = build_ring(spec);
        CAPTURE(spec);
        CHECK(radical_nilpotency(*ring) == exponent);

        // closure under +, and under multiplication by R on both sides
        for (int x : ring->radical)
            for (int y = 0; y < ring->order; ++y) {
                if (ring->in_radical(y)) CHECK(ring->in_radical(ring->add(x, y)));
                CHECK(ring->in_radical(ring->mul(x, y)));
                CHECK(ring->in_radical(ring->mul(y, x)));
            }

        // rad^(exponent-1) != 0 = rad^exponent, by direct products
        if (exponent == 1) {
            CHECK(ring->radical == std::vector<int>{ring->zero});
        } else {
            std::vector<int> power = ring->radical;  // rad^1
            for (int step = 2; step < exponent; ++step) {
                std::set<int> next;
                for (int x : power)
                    for (int y : ring->radical) next.insert(ring->mul(x, y));
                power.assign(next.begin(), next.end());
            }
            CHECK(power != std::vector<int>{ring->zero});
            std::set<int> last;
            for (int x : power)
                for (int y : ring->radical) last.insert(ring->mul(x, y));
            CHECK(last == std::set<int>{ring->zero});
        }
    }
}

TEST_CASE("builds are deterministic") {
    for (const char* spec : {"GF(9)", "dual(GF(4),h=2,frob=1)", "mat(2,GF(3))"}) {
        auto a = build_ring(spec);
        auto b = build_ring(spec);
        CAPTURE(spec);
        CHECK(a->add_table == b->add_table);
        CHECK(a->mul_table == b->mul_table);
        CHECK(a->labels == b->labels);
        CHECK(a->units == b->units);
        CHECK(a->radical == b->radical);
    }
}

TEST_CASE("quotient by the radical is semisimple and the epimorphism checks out") {
    auto dual3 = build_ring("dual(GF(3),h=2)");
    auto [quotient, onto] = quotient_by_radical(dual3);
    CHECK(quotient->order == 3);
    CHECK(quotient->is_field());
    CHECK(verify_hom(onto));
    // fibres are radical cosets, all of size |rad|
    std::vector<int> fibre(quotient->order, 0);
    for (int x = 0; x < dual3->order; ++x) ++fibre[onto.map[x]];
    for (int size : fibre) CHECK(size == 3);

    // a semisimple ring is its own quotient
    auto z6 = build_ring("Z/6");
    CHECK(quotient_by_radical(z6).quotient->order == 6);
    CHECK(quotient_by_radical(z6).quotient->radical == std::vector<int>{0});

    auto twisted = build_ring("dual(GF(4),h=2,frob=1)");
    auto tq = quotient_by_radical(twisted);
    CHECK(tq.quotient->order == 4);
    CHECK(tq.quotient->is_field());
    CHECK(verify_hom(tq.onto));
}

TEST_CASE("wedderburn signature demands a semisimple argument") {
    auto z4 = build_ring("Z/4");
    CHECK_THROWS_AS(wedderburn_signature(*z4), std::invalid_argument);
    CHECK(wedderburn_signature(*build_ring("Z/6")) ==
          std::vector<std::pair<int, long long>>{{1, 2}, {1, 3}});
    CHECK(wedderburn_signature(*build_ring("mat(2,GF(2))")) ==
          std::vector<std::pair<int, long long>>{{2, 2}});
}

TEST_CASE("galois field construction data") {
    auto gf8 = build_ring("GF(8)");
    REQUIRE(gf8->gf.has_value());
    CHECK(gf8->gf->p == 2);
    CHECK(gf8->gf->d == 3);
    REQUIRE(gf8->gf->modulus.size() == 4);
    CHECK(gf8->gf->modulus.back() == 1);  // monic
    // no roots in GF(2), so no linear factor over the prime field
    for (int x : {0, 1}) {
        int value = 0;
        for (int i = 3; i >= 0; --i) value = (value * x + gf8->gf->modulus[i]) % 2;
        CHECK(value != 0);
    }
    CHECK(gf8->is_field());
    CHECK(gf8->local_ring);

    // multiplicative group is cyclic of order q-1: some element has full order
    bool found_generator = false;
    for (int u : gf8->units) {
        int pow = u, order = 1;
        while (pow != gf8->one) { pow = gf8->mul(pow, u); ++order; }
        if (order == 7) found_generator = true;
    }
    CHECK(found_generator);
}

TEST_CASE("structural base embeddings are verified homomorphisms") {
    for (const char* spec :
         {"GF(4)", "GF(9)", "dual(GF(3),h=2)", "dual(GF(4),h=2,frob=1)", "mat(2,GF(2))",
          "ext(GF(2),n=2)"}) {
        auto ring = build_ring(spec);
        CAPTURE(spec);
        REQUIRE(ring->base != nullptr);
        REQUIRE(ring->base_embedding.size() == static_cast<size_t>(ring->base->order));
        CHECK(verify_hom({ring->base, ring, ring->base_embedding}));
        // injective
        std::set<int> image(ring->base_embedding.begin(), ring->base_embedding.end());
        CHECK(image.size() == ring->base_embedding.size());
    }
    CHECK(build_ring("GF(4)")->base->order == 2);
    CHECK(build_ring("dual(GF(3),h=2)")->base->order == 3);
}

TEST_CASE("labels are distinct, and identities act as identities") {
    for (const auto& ring : zoo()) {
        CAPTURE(ring->spec);
        std::set<std::string> seen(ring->labels.begin(), ring->labels.end());
        CHECK(seen.size() == static_cast<size_t>(ring->order));
        for (int x = 0; x < ring->order; ++x) {
            CHECK(ring->add(ring->zero, x) == x);
            CHECK(ring->mul(ring->one, x) == x);
            CHECK(ring->mul(x, ring->one) == x);
            CHECK(ring->add(x, ring->neg(x)) == ring->zero);
        }
    }
}

TEST_CASE("characteristic is the additive order of one") {
    for (const auto& ring : zoo()) {
        CAPTURE(ring->spec);
        int x = ring->one;
        long long order = 1;
        while (x != ring->zero) { x = ring->add(x, ring->one); ++order; }
        CHECK(order == ring->characteristic);
    }
}

TEST_CASE("exterior algebras need a field of scalars") {
    CHECK_THROWS_AS(build_ring("ext(Z/4,n=1)"), std::invalid_argument);
    // over a field, n=1 gives the dual numbers
    auto ext1 = build_ring("ext(GF(3),n=1)");
    CHECK(ext1->order == 9);
    CHECK(ext1->local_ring);
    CHECK(ext1->radical.size() == 3);
}

TEST_CASE("order caps throw instead of building huge tables") {
    CHECK_THROWS_AS(build_ring("Z/80", BuildOptions{64}), CapError);
    auto big = build_ring("Z/80", BuildOptions{128});
    CHECK(big->order == 80);
    CHECK_THROWS_AS(build_ring("mat(2,GF(16))"), CapError);  // 16^4 over the default cap
}

TEST_CASE("table rings: a hand-written product of two fields") {
    testutil::TempFile file("ring_k4.ring",
                            "# GF(2) x GF(2) with elements 0, 1, a = (1,0), b = (0,1)\n"
                            "ring 4\n"
                            "labels\n0 1 a b\n"
                            "add\n"
                            "0 1 2 3\n"
                            "1 0 3 2\n"
                            "2 3 0 1\n"
                            "3 2 1 0\n"
                            "mul\n"
                            "0 0 0 0\n"
                            "0 1 2 3\n"
                            "0 2 2 0\n"
                            "0 3 0 3\n");
    auto ring = load_table_ring(file.path());
    CHECK(ring->order == 4);
    CHECK(ring->one == 1);
    CHECK(ring->commutative);
    CHECK_FALSE(ring->local_ring);
    CHECK(ring->units == std::vector<int>{1});
    CHECK(ring->radical == std::vector<int>{0});
    CHECK(ring->characteristic == 2);
    CHECK(ring->label(2) == "a");
    CHECK(wedderburn_signature(*ring) ==
          std::vector<std::pair<int, long long>>{{1, 2}, {1, 2}});

    // the same ring through the spec language, via table()
    auto via_spec = build_ring("table(" + file.path() + ")");
    CHECK(via_spec->order == 4);
    CHECK(via_spec->units == std::vector<int>{1});
}

TEST_CASE("table rings: axiom violations are rejected with a reason") {
    // additive table is not a group (row 1 repeats an entry)
    CHECK_THROWS_AS(ring_from_tables("broken", 2, {0, 1, 1, 1}, {0, 0, 0, 1}, {}),
                    std::invalid_argument);
    // no multiplicative identity
    CHECK_THROWS_AS(ring_from_tables("broken", 2, {0, 1, 1, 0}, {0, 0, 0, 0}, {}),
                    std::invalid_argument);
    // distributivity breach: mul(1,1) redefined in Z/3
    CHECK_THROWS_AS(
        ring_from_tables("broken", 3, {0, 1, 2, 1, 2, 0, 2, 0, 1}, {0, 0, 0, 0, 2, 2, 0, 2, 1}, {}),
        std::invalid_argument);

    testutil::TempFile bad_header("ring_bad1.ring", "ring 1\nlabels\nx\nadd\n0\nmul\n0\n");
    CHECK_THROWS_AS(load_table_ring(bad_header.path()), ParseError);
    testutil::TempFile short_matrix("ring_bad2.ring",
                                    "ring 2\nlabels\n0 1\nadd\n0 1\n1 0\nmul\n0 0\n");
    CHECK_THROWS_AS(load_table_ring(short_matrix.path()), ParseError);
    testutil::TempFile out_of_range("ring_bad3.ring",
                                    "ring 2\nlabels\n0 1\nadd\n0 7\n1 0\nmul\n0 0\n0 1\n");
    CHECK_THROWS_AS(load_table_ring(out_of_range.path()), ParseError);
    CHECK_THROWS_AS(load_table_ring("/no/such/file.ring"), ParseError);
}

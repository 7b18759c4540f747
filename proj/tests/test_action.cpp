#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ringline/action.hpp"
#include "ringline/errors.hpp"
#include "oracles.hpp"

using namespace ringline;

namespace {

struct ActionFixture {
    RingPtr ring;
    ProjLine line;
    std::vector<Mat2> gens;
};

ActionFixture make(const std::string& spec) {
    auto ring = build_ring(spec);
    return {ring, build_line(ring), gl2_generators(*ring)};
}

}  // namespace

TEST_CASE("group orders: closed form, exhaustive scan, and bijectivity oracle") {
    const std::vector<std::pair<std::string, long long>> expected = {
        {"GF(2)", 6},           {"GF(5)", 480},          {"Z/4", 96},
        {"Z/6", 288},           {"Z/8", 1536},           {"dual(GF(2),h=2)", 96},
        {"dual(GF(4),h=2,frob=1)", 46080},               {"mat(2,GF(2))", 20160},
        {"prod(GF(2),GF(3))", 288},                      {"ext(GF(2),n=2)", 24576},
    };
    for (const auto& [spec, order] : expected) {
        auto ring = build_ring(spec);
        CAPTURE(spec);
        CHECK(gl2_order(ring) == order);
        CHECK(gl2_order_exhaustive(*ring) == order);
        CHECK(oracles::gl2_count_by_bijectivity(*ring) == order);
    }
    CHECK(gln_order(2, 2) == 6);
    CHECK(gln_order(2, 4) == 20160);
    CHECK(gln_order(3, 2) == 48);
}

TEST_CASE("matrix invertibility matches the bijectivity definition over Z/6") {
    auto ring = build_ring("Z/6");
    long long invertible = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                for (int d = 0; d < 6; ++d) {
                    Mat2 m{a, b, c, d};
                    std::set<std::pair<int, int>> image;
                    for (int x = 0; x < 6; ++x)
                        for (int y = 0; y < 6; ++y)
                            image.insert({ring->add(ring->mul(x, a), ring->mul(y, c)),
                                          ring->add(ring->mul(x, b), ring->mul(y, d))});
                    bool bijective = image.size() == 36;
                    CHECK(matrix_invertible(*ring, m) == bijective);
                    if (bijective) ++invertible;
                }
    CHECK(invertible == 288);
}

TEST_CASE("inverses invert, on both sides, including a non-commutative ring") {
    for (const char* spec : {"Z/6", "dual(GF(4),h=2,frob=1)", "mat(2,GF(2))"}) {
        auto ring = build_ring(spec);
        CAPTURE(spec);
        int checked = 0;
        for (int a = 0; a < ring->order && checked < 40; ++a)
            for (int b = 0; b < ring->order && checked < 40; ++b) {
                Mat2 m{a, b, ring->one, ring->one};
                if (!matrix_invertible(*ring, m)) continue;
                Mat2 inv = mat_inverse(*ring, m);
                Mat2 left = mat_mul(*ring, inv, m);
                Mat2 right = mat_mul(*ring, m, inv);
                for (Mat2 e : {left, right}) {
                    CHECK(e.a == ring->one);
                    CHECK(e.b == ring->zero);
                    CHECK(e.c == ring->zero);
                    CHECK(e.d == ring->one);
                }
                ++checked;
            }
        CHECK(checked > 0);
    }
}

TEST_CASE("the generators really generate the whole group") {
    for (const char* spec : {"GF(3)", "Z/4", "Z/6", "dual(GF(2),h=2)",
                             "dual(GF(4),h=2,frob=1)", "mat(2,GF(2))", "ext(GF(2),n=2)"}) {
        auto ring = build_ring(spec);
        CAPTURE(spec);
        CHECK(generated_matrix_group_order(*ring, gl2_generators(*ring)) == gl2_order(ring));
    }
}

TEST_CASE("point permutations preserve the distant graph and the parallel classes") {
    for (const char* spec : {"Z/6", "dual(GF(4),h=2,frob=1)"}) {
        auto fx = make(spec);
        CAPTURE(spec);
        const int v = fx.line.point_count();
        for (const Mat2& g : fx.gens) {
            auto perm = point_permutation(fx.line, g);
            std::set<int> image(perm.begin(), perm.end());
            REQUIRE(static_cast<int>(image.size()) == v);
            for (int p = 0; p < v; ++p) {
                for (int q = 0; q < v; ++q)
                    CHECK(distant(fx.line, p, q) == distant(fx.line, perm[p], perm[q]));
                CHECK((fx.line.class_of[p] == fx.line.class_of[0 < p ? p - 1 : 0]) ==
                      (fx.line.class_of[perm[p]] == fx.line.class_of[perm[0 < p ? p - 1 : 0]]));
            }
        }
    }
}

TEST_CASE("the identity matrix induces the identity permutation") {
    auto fx = make("Z/4");
    Mat2 id{fx.ring->one, fx.ring->zero, fx.ring->zero, fx.ring->one};
    auto perm = point_permutation(fx.line, id);
    for (int p = 0; p < fx.line.point_count(); ++p) CHECK(perm[p] == p);
    CHECK_THROWS_AS(point_permutation(fx.line, Mat2{fx.ring->zero, fx.ring->zero, fx.ring->zero,
                                                    fx.ring->zero}),
                    std::invalid_argument);
}

TEST_CASE("transitivity on mutually distant triples, with a counted cross-check") {
    for (const char* spec :
         {"GF(2)", "GF(5)", "Z/4", "Z/6", "Z/8", "dual(GF(2),h=2)",
          "dual(GF(4),h=2,frob=1)", "mat(2,GF(2))", "prod(GF(2),GF(3))", "ext(GF(2),n=2)"}) {
        auto fx = make(spec);
        CAPTURE(spec);
        std::vector<std::vector<int>> perms;
        for (const Mat2& g : fx.gens) perms.push_back(point_permutation(fx.line, g));
        CHECK(check_3_transitivity(fx.line, perms));
    }

    // recount ordered distant triples literally
    for (const char* spec : {"Z/6", "dual(GF(4),h=2,frob=1)", "mat(2,GF(2))"}) {
        auto fx = make(spec);
        CAPTURE(spec);
        long long count = 0;
        const int v = fx.line.point_count();
        for (int p = 0; p < v; ++p)
            for (int q = 0; q < v; ++q) {
                if (!distant(fx.line, p, q)) continue;
                for (int r = 0; r < v; ++r)
                    if (distant(fx.line, p, r) && distant(fx.line, q, r)) ++count;
            }
        CHECK(distant_ordered_triple_count(fx.line) == count);
    }
    CHECK(distant_ordered_triple_count(make("GF(5)").line) == 6 * 5 * 4);
    CHECK(distant_ordered_triple_count(make("Z/6").line) == 144);
}

TEST_CASE("orbits: transitivity on points, seed independence, lex order, caps") {
    for (const char* spec : {"Z/6", "dual(GF(2),h=2)", "mat(2,GF(2))"}) {
        auto fx = make(spec);
        CAPTURE(spec);
        std::vector<std::vector<int>> perms;
        for (const Mat2& g : fx.gens) perms.push_back(point_permutation(fx.line, g));
        const int v = fx.line.point_count();

        auto orbit_from_0 = orbit_blocks({{0}}, perms);
        CHECK(static_cast<int>(orbit_from_0.size()) == v);
        CHECK(std::is_sorted(orbit_from_0.begin(), orbit_from_0.end()));
        auto orbit_from_last = orbit_blocks({{v - 1}}, perms);
        CHECK(orbit_from_0 == orbit_from_last);

        CHECK_THROWS_AS(orbit_blocks({{0}}, perms, 2), CapError);
    }
}

TEST_CASE("orbit-stabiliser bookkeeping on distant pairs over GF(3)") {
    auto fx = make("GF(3)");
    std::vector<std::vector<int>> perms;
    for (const Mat2& g : fx.gens) perms.push_back(point_permutation(fx.line, g));

    // all pairs are distant on a field line, and GL2 moves any pair to any other
    auto orbit = orbit_blocks({{0, 1}}, perms);
    CHECK(orbit.size() == 6);  // C(4,2)
    Int stab = stabiliser_order({0, 1}, perms, gl2_order(fx.ring));
    CHECK(stab * 6 == 48);

    auto point_orbit = orbit_blocks({{2}}, perms);
    CHECK(point_orbit.size() == 4);
    CHECK(stabiliser_order({2}, perms, gl2_order(fx.ring)) == 12);
}

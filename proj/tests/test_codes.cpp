#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <vector>

#include "ringline/codes.hpp"
#include "ringline/errors.hpp"
#include "testutil.hpp"

using namespace ringline;

namespace {

Design load(const std::string& name) { return read_design_file(testutil::fixture(name)); }

int min_distance(const ConstantWeightCode& code) {
    int best = code.n + 1;
    for (size_t i = 0; i < code.words.size(); ++i)
        for (size_t j = i + 1; j < code.words.size(); ++j)
            best = std::min(best, hamming_distance(code.words[i], code.words[j]));
    return best;
}

}  // namespace

TEST_CASE("the octahedron code is every word over {1,2}^3") {
    auto code = code_from_design(load("octahedron.dd"));
    CHECK(code.n == 3);
    CHECK(code.m == 3);
    CHECK(code.k == 3);
    std::vector<std::vector<int>> expected;
    for (int a : {1, 2})
        for (int b : {1, 2})
            for (int c : {1, 2}) expected.push_back({a, b, c});
    CHECK(code.words == expected);
    CHECK(verify_constant_weight(code));
    CHECK(min_distance(code) == 1);
}

TEST_CASE("nine affine lines give a length-three code of minimum distance two") {
    auto code = code_from_design(load("pappos.dd"));
    CHECK(code.n == 3);
    CHECK(code.m == 4);
    CHECK(code.k == 3);
    CHECK(code.words.size() == 9);
    CHECK(verify_constant_weight(code));
    // parallel lines are disjoint (distance 3), crossing lines share one point
    CHECK(min_distance(code) == 2);
    // the slope-0 line through the bottom row reads symbol 1 everywhere
    CHECK(std::binary_search(code.words.begin(), code.words.end(), std::vector<int>{1, 1, 1}));
}

TEST_CASE("a punctured projective plane gives an equidistant code") {
    auto code = code_from_design(load("punctured_pg23.dd"));
    CHECK(code.n == 4);
    CHECK(code.m == 4);
    CHECK(code.k == 4);
    CHECK(code.words.size() == 9);
    for (size_t i = 0; i < code.words.size(); ++i)
        for (size_t j = i + 1; j < code.words.size(); ++j)
            CHECK(hamming_distance(code.words[i], code.words[j]) == 3);
}

TEST_CASE("blocks smaller than the class count produce the zero symbol") {
    auto code = code_from_design(load("fano.dd"));
    CHECK(code.n == 7);
    CHECK(code.m == 2);  // singleton classes: symbols 0 and 1 only
    CHECK(code.k == 3);
    CHECK(code.words.size() == 7);
    for (const auto& w : code.words) {
        CHECK(hamming_weight(w) == 3);
        CHECK(std::count(w.begin(), w.end(), 0) == 4);
    }
    CHECK(min_distance(code) == 4);
}

TEST_CASE("weight verification notices tampered words") {
    auto code = code_from_design(load("octahedron4.dd"));
    CHECK(verify_constant_weight(code));

    auto dropped = code;
    for (int& sym : dropped.words[0])
        if (sym != 0) {
            sym = 0;
            break;
        }
    CHECK_FALSE(verify_constant_weight(dropped));

    auto stretched = code;
    stretched.words[1].push_back(1);
    CHECK_FALSE(verify_constant_weight(stretched));

    CHECK_THROWS_AS(hamming_distance({1, 2}, {1, 2, 0}), std::invalid_argument);
}

TEST_CASE("code construction rejects designs without a single word shape") {
    CHECK_THROWS_AS(code_from_design(load("counterexample.dd")), std::invalid_argument);

    Design ragged;
    ragged.v = 4;
    ragged.t = 1;
    ragged.classes = {{0}, {1}, {2}, {3}};
    ragged.blocks = {{0, 1}, {0, 1, 2}};
    CHECK_THROWS_AS(code_from_design(ragged), std::invalid_argument);

    Design empty;
    empty.v = 2;
    empty.t = 1;
    empty.classes = {{0}, {1}};
    CHECK_THROWS_AS(code_from_design(empty), std::invalid_argument);

    Design doubled;
    doubled.v = 2;
    doubled.t = 1;
    doubled.classes = {{0, 1}};
    doubled.blocks = {{0, 1}};
    CHECK_THROWS_AS(code_from_design(doubled), std::invalid_argument);
}

TEST_CASE("labelling validation") {
    auto design = load("octahedron.dd");
    auto psi = canonical_labelling(design);
    CHECK(psi.class_order == std::vector<int>{0, 1, 2});
    CHECK(psi.point_symbols == std::vector<std::vector<int>>{{1, 2}, {1, 2}, {1, 2}});
    CHECK(code_from_design(design, psi).words == code_from_design(design).words);

    auto bad = psi;
    bad.class_order = {0, 0, 1};
    CHECK_THROWS_AS(code_from_design(design, bad), std::invalid_argument);
    bad = psi;
    bad.class_order = {0, 1};
    CHECK_THROWS_AS(code_from_design(design, bad), std::invalid_argument);
    bad = psi;
    bad.point_symbols[1] = {1};
    CHECK_THROWS_AS(code_from_design(design, bad), std::invalid_argument);
    bad = psi;
    bad.point_symbols[2] = {1, 1};
    CHECK_THROWS_AS(code_from_design(design, bad), std::invalid_argument);
    bad = psi;
    bad.point_symbols[0] = {0, 1};
    CHECK_THROWS_AS(code_from_design(design, bad), std::invalid_argument);
}

TEST_CASE("a relabelled construction yields an isomorphic code") {
    auto design = load("pappos.dd");
    auto code = code_from_design(design);

    CodeLabelling psi;
    psi.class_order = {1, 2, 0};
    psi.point_symbols = {{1, 2, 3}, {1, 2, 3}, {2, 1, 3}};
    auto relabelled = code_from_design(design, psi);
    CHECK(relabelled.words != code.words);
    CHECK(verify_constant_weight(relabelled));

    auto iso = find_code_isomorphism(code, relabelled);
    REQUIRE(iso.has_value());
    auto image = apply_code_isomorphism(code, *iso);
    CHECK(image.words == relabelled.words);
    CHECK(image.n == relabelled.n);
    CHECK(image.k == relabelled.k);

    // the identity relabelling is found for a code against itself
    auto self = find_code_isomorphism(code, code);
    REQUIRE(self.has_value());
    CHECK(apply_code_isomorphism(code, *self).words == code.words);
}

TEST_CASE("isomorphism search distinguishes codes by their metric structure") {
    auto oct = code_from_design(load("octahedron.dd"));
    auto four = code_from_design(load("octahedron4.dd"));
    CHECK_FALSE(find_code_isomorphism(oct, four).has_value());  // 8 vs 4 words

    auto pappos = code_from_design(load("pappos.dd"));
    CHECK_FALSE(find_code_isomorphism(oct, pappos).has_value());  // symbol counts differ

    // same shape, different distance multisets
    ConstantWeightCode a{3, 3, 3, {{1, 1, 1}, {1, 2, 2}}};
    ConstantWeightCode b{3, 3, 3, {{1, 1, 1}, {2, 2, 2}}};
    CHECK_FALSE(find_code_isomorphism(a, b).has_value());

    auto fano = code_from_design(load("fano.dd"));
    CHECK_THROWS_AS(find_code_isomorphism(fano, fano), std::invalid_argument);  // n = 7

    CHECK_THROWS_AS(apply_code_isomorphism(oct, CodeIsomorphism{{0, 1}, {{0, 1, 2}, {0, 1, 2}}}),
                    std::invalid_argument);
}

TEST_CASE("symbol permutations may exchange the zero symbol") {
    auto fano = code_from_design(load("punctured_fano.dd"));  // n=3, m=3, weight 3
    CodeIsomorphism swap01;
    swap01.coordinate_perm = {0, 1, 2};
    swap01.symbol_perms = {{1, 0, 2}, {1, 0, 2}, {1, 0, 2}};
    auto image = apply_code_isomorphism(fano, swap01);
    // full-weight words stay full weight only if no symbol becomes zero
    CHECK(image.words.size() == fano.words.size());
    bool any_zero = false;
    for (const auto& w : image.words) any_zero |= hamming_weight(w) < image.n;
    CHECK(any_zero);
    CHECK_FALSE(verify_constant_weight(image));
}

TEST_CASE("codes survive a file round trip") {
    auto code = code_from_design(load("pappos.dd"));
    testutil::TempFile file("codes_roundtrip.cwc");
    write_code_file(file.path(), code);
    auto back = read_code_file(file.path());
    CHECK(back.n == code.n);
    CHECK(back.m == code.m);
    CHECK(back.k == code.k);
    CHECK(back.words == code.words);

    std::string text = testutil::slurp(file.path());
    CHECK(text.rfind("cwc n=3 m=4 k=3\n", 0) == 0);
}

TEST_CASE("code files with comments and stray spacing still parse") {
    std::istringstream in(
        "# two words over three symbols\n"
        "cwc n=3 m=3 k=3\n"
        "\n"
        "1 2 2   # a word\n"
        "2 1 1\n");
    auto code = read_code(in);
    CHECK(code.n == 3);
    CHECK(code.words == std::vector<std::vector<int>>{{1, 2, 2}, {2, 1, 1}});
}

TEST_CASE("malformed code files raise parse errors") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_code(in);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("cwc n=3 m=3 k=3\n"), ParseError);           // no words
    CHECK_THROWS_AS(parse("cwc n=3 m=3\n1 1 1\n"), ParseError);        // missing k=
    CHECK_THROWS_AS(parse("dd n=3 m=3 k=3\n1 1 1\n"), ParseError);     // wrong tag
    CHECK_THROWS_AS(parse("cwc n=3 m=3 k=x\n1 1 1\n"), ParseError);    // bad number
    CHECK_THROWS_AS(parse("cwc n=3 m=3 k=4\n1 1 1\n"), ParseError);    // k > n
    CHECK_THROWS_AS(parse("cwc n=3 m=3 k=3 x\n1 1 1\n"), ParseError);  // trailing junk

    try {
        parse("cwc n=3 m=3 k=3\n1 1\n");
        FAIL("wrong length accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    try {
        parse("cwc n=3 m=3 k=3\n1 2 2\n1 3 1\n");
        FAIL("out-of-range symbol accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse("cwc n=3 m=3 k=3\n1 -1 1\n"), ParseError);
    CHECK_THROWS_AS(parse("cwc n=3 m=3 k=3\n1 2 2\n1 2 2\n"), ParseError);  // duplicate
    CHECK_THROWS_AS(parse("cwc n=3 m=3 k=3\n1 2 z\n"), ParseError);
    CHECK_THROWS_AS(read_code_file("/no/such/code.cwc"), ParseError);
}

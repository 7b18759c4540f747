#include <doctest.h>

#include <string>
#include <vector>

#include "ringline/errors.hpp"
#include "ringline/ringspec.hpp"
#include "testutil.hpp"

using namespace ringline;

TEST_CASE("parse accepts every construction and prints a canonical form") {
    // left: input with assorted whitespace; right: canonical print
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"Z/6", "Z/6"},
        {" Z/ 17 ", "Z/17"},
        {"GF(9)", "GF(9)"},
        {"GF( 128 )", "GF(128)"},
        {"dual(GF(4), h=2)", "dual(GF(4),h=2)"},
        {"dual( GF(3) , h = 3 )", "dual(GF(3),h=3)"},
        {"dual(GF(4), h=2, frob=1)", "dual(GF(4),h=2,frob=1)"},
        {"mat(2, GF(2))", "mat(2,GF(2))"},
        {"mat( 3 , Z/4 )", "mat(3,Z/4)"},
        {"prod(GF(2), GF(3))", "prod(GF(2),GF(3))"},
        {"prod(Z/4, prod(GF(2), GF(5)))", "prod(Z/4,prod(GF(2),GF(5)))"},
        {"ext(GF(2), n=2)", "ext(GF(2),n=2)"},
        {"dual(dual(GF(2),h=2),h=2)", "dual(dual(GF(2),h=2),h=2)"},
        {"table(some/path.ring)", "table(some/path.ring)"},
    };
    for (const auto& [input, canonical] : cases) {
        CAPTURE(input);
        auto spec = parse_ring_spec(input);
        CHECK(print_ring_spec(*spec) == canonical);
        // printing is a fixed point of parse-then-print
        auto again = parse_ring_spec(canonical);
        CHECK(print_ring_spec(*again) == canonical);
    }
}

TEST_CASE("spec_order matches the construction sizes") {
    auto order = [](const std::string& s) { return spec_order(*parse_ring_spec(s)); };
    CHECK(order("Z/6") == 6);
    CHECK(order("GF(4)") == 4);
    CHECK(order("dual(GF(4),h=3)") == 64);
    CHECK(order("dual(GF(4),h=2,frob=1)") == 16);
    CHECK(order("mat(2,GF(2))") == 16);
    CHECK(order("mat(2,Z/4)") == 256);
    CHECK(order("prod(Z/4,GF(9))") == 36);
    CHECK(order("ext(GF(2),n=2)") == 16);
    CHECK(order("ext(GF(3),n=1)") == 9);
    CHECK(order("ext(GF(2),n=3)") == 256);
}

TEST_CASE("parse kinds and fields land where they should") {
    auto spec = parse_ring_spec("dual(GF(4),h=2,frob=1)");
    CHECK(spec->kind == RingSpec::Kind::TwistedDual);
    CHECK(spec->frob == 1);
    REQUIRE(spec->args.size() == 1);
    CHECK(spec->args[0]->kind == RingSpec::Kind::GaloisField);
    CHECK(spec->args[0]->n == 4);

    auto plain = parse_ring_spec("dual(GF(4),h=2)");
    CHECK(plain->kind == RingSpec::Kind::DualNumbers);
    CHECK(plain->n == 2);

    auto prod = parse_ring_spec("prod(GF(2),GF(3),GF(5))");
    CHECK(prod->kind == RingSpec::Kind::Product);
    CHECK(prod->args.size() == 3);

    auto table = parse_ring_spec("table(rings/k4.ring)");
    CHECK(table->kind == RingSpec::Kind::TableRing);
    CHECK(table->path == "rings/k4.ring");
}

TEST_CASE("syntax errors carry a 1-based position and never yield an AST") {
    auto position = [](const std::string& text) {
        try {
            parse_ring_spec(text);
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
            return e.column();
        }
        FAIL("expected a parse error for '", text, "'");
        return -1;
    };

    CHECK(position("") >= 1);
    CHECK(position("GF(4") > 1);        // unclosed paren
    CHECK(position("GF(4))") > 1);      // trailing junk
    CHECK(position("GF(x)") == 4);      // number expected at the argument
    CHECK(position("Q/6") == 1);        // unknown head
    CHECK(position("prod(GF(2);GF(3))") > 1);
    CHECK(position("mat(GF(2),2)") > 1);  // arguments swapped
    CHECK(position("dual(GF(2) h=2)") > 1);
}

TEST_CASE("semantic rejections: orders, twists, arities") {
    CHECK_THROWS_AS(parse_ring_spec("GF(6)"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("GF(1)"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("Z/1"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("Z/0"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("dual(GF(2),h=1)"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("mat(0,GF(2))"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("ext(GF(2),n=0)"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("prod()"), ParseError);
    // grammatical but semantically bad bases (ext over a non-field) are
    // caught by build_ring, not the parser; see the ring suite

    // identity twists are rejected, including every twist over a prime field
    CHECK_THROWS_AS(parse_ring_spec("dual(GF(2),h=2,frob=1)"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("dual(GF(4),h=2,frob=2)"), ParseError);
    CHECK_THROWS_AS(parse_ring_spec("dual(GF(4),h=3,frob=1)"), ParseError);  // twist needs h=2
    CHECK_THROWS_AS(parse_ring_spec("dual(Z/4,h=2,frob=1)"), ParseError);    // twist needs a field

    // a non-identity twist parses
    CHECK(parse_ring_spec("dual(GF(9),h=2,frob=1)")->frob == 1);
    CHECK_NOTHROW(parse_ring_spec("dual(GF(8),h=2,frob=2)"));
}

TEST_CASE("spec_order reads only the header of a table file") {
    testutil::TempFile good("ringspec_order.ring", "ring 4\n# rest unread by spec_order\n");
    auto spec = parse_ring_spec("table(" + good.path() + ")");
    CHECK(spec_order(*spec) == 4);

    testutil::TempFile bad("ringspec_bad.ring", "din 4\n");
    auto bad_spec = parse_ring_spec("table(" + bad.path() + ")");
    CHECK_THROWS_AS(spec_order(*bad_spec), ParseError);
    CHECK_THROWS_AS(spec_order(*parse_ring_spec("table(/no/such/file.ring)")), ParseError);
}

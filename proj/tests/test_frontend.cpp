#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace liesym;
using liesym::test::P;
using liesym::test::R;
using liesym::test::Rng;

TEST_CASE("parses the worked ODEs") {
    auto ode1 = parse_ode("y'' = (2*y - 3*z*y + z^2*y - z*x + z^2*x)/(y*(y-x))");
    REQUIRE(ode1.ok());
    CHECK(ode1.value->N() == P("x*y - y^2"));
    CHECK(ode1.value->M() == P("3*y*z - y*z^2 - x*z^2 - 2*y + x*z"));

    auto ode2 = parse_ode("y'' = -(x^2 + 4*y^4 + 2*y^2)/(4*y^3)");
    REQUIRE(ode2.ok());
    CHECK(ode2.value->N() == P("y^3"));
    CHECK(ode2.value->M() == P("-1/4*x^2 - y^4 - 1/2*y^2"));

    auto trivial = parse_ode("y'' = 0");
    REQUIRE(trivial.ok());
    CHECK(trivial.value->phi().is_zero());
    CHECK(trivial.value->N() == MultiPoly::one());
}

TEST_CASE("y' and z are synonyms") {
    CHECK(R("y' + 1") == R("z + 1"));
    auto a = parse_ode("y'' = y'*y");
    auto b = parse_ode("y'' = z*y");
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(a.value->M() == b.value->M());
}

TEST_CASE("gcd cancellation in build_ode") {
    auto ode = parse_ode("y'' = (x*y)/y");
    REQUIRE(ode.ok());
    CHECK(ode.value->M() == P("x"));
    CHECK(ode.value->N() == MultiPoly::one());
}

TEST_CASE("parse failures carry spans") {
    auto bad = parse_ode("y'' = (1 + x");
    REQUIRE_FALSE(bad.ok());
    REQUIRE_FALSE(bad.diagnostics.empty());
    CHECK(bad.diagnostics[0].span.start == 6);

    auto rhs_ypp = parse_ode("y'' = y'' + 1");
    REQUIRE_FALSE(rhs_ypp.ok());
    CHECK(rhs_ypp.diagnostics[0].span.start == 6);
    CHECK(rhs_ypp.diagnostics[0].span.end == 9);

    auto exp = parse_ratfunc("x^y");
    REQUIRE_FALSE(exp.ok());
    CHECK(exp.diagnostics[0].span.start == 2);

    auto word = parse_ratfunc("x + foo");
    REQUIRE_FALSE(word.ok());
    CHECK(word.diagnostics[0].message.find("foo") != std::string::npos);
    CHECK(word.diagnostics[0].span.start == 4);
    CHECK(word.diagnostics[0].span.end == 7);
}

TEST_CASE("i is a reserved constant") {
    auto r = parse_ratfunc("i^2");
    REQUIRE(r.ok());
    CHECK(*r.value == RationalFunction(GaussianRational(-1)));
    auto ode = parse_ode("y'' = i*y");
    REQUIRE(ode.ok());
}

TEST_CASE("s allowed only where requested") {
    CHECK(parse_ratfunc("s + x", true).ok());
    CHECK_FALSE(parse_ratfunc("s + x", false).ok());
    CHECK_FALSE(parse_ode("y'' = s").ok());
}

TEST_CASE("no implicit multiplication") {
    auto r = parse_ratfunc("2x");
    REQUIRE_FALSE(r.ok());
}

TEST_CASE("precedence and associativity") {
    CHECK(R("-x^2") == -R("x^2"));
    CHECK(R("2 - 3 - 4") == R("-5"));
    CHECK(R("2*x/2") == R("x"));
    CHECK(R("x/y^2*z") == R("(x*z)/y^2"));
    CHECK(R("1/2/2") == R("1/4"));
    CHECK(R("x^2^3") == R("x^6"));  // left-assoc on the evaluated base
    CHECK(R("-x^2 + x^2").is_zero());
}

TEST_CASE("print/parse round trip on random values") {
    Rng rng(21);
    for (int k = 0; k < 500; ++k) {
        MultiPoly p = rng.poly(5, 4, true);
        auto back = parse_poly(to_string(p));
        REQUIRE(back.ok());
        CHECK(*back.value == p);
    }
    for (int k = 0; k < 500; ++k) {
        RationalFunction f = rng.ratfunc(4, 3);
        auto back = parse_ratfunc(to_string(f));
        REQUIRE(back.ok());
        CHECK(*back.value == f);
    }
}

TEST_CASE("gaussian rendering round trips through the grammar") {
    Rng rng(23);
    for (int k = 0; k < 300; ++k) {
        GaussianRational c = rng.gaussian();
        auto back = parse_ratfunc(to_string(MultiPoly(c)));
        REQUIRE(back.ok());
        CHECK(back.value->is_constant());
        CHECK(back.value->constant_value() == c);
    }
}

TEST_CASE("eigenpolynomial rendering example") {
    CHECK(to_string(P("x + y*z + s*y^2")) == "x + y*z + y^2*s");
    CHECK(to_string(GaussianRational::i()) == "i");
}

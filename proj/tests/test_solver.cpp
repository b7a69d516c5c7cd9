#include <catch2/catch_amalgamated.hpp>

#include "liesym/factor.hpp"
#include "support.hpp"

using namespace liesym;
using liesym::test::P;

namespace {

SolverPoly U(int k) { return SolverPoly::unknown(k); }
SolverPoly C(long v) { return SolverPoly(GaussianRational(v)); }

}  // namespace

TEST_CASE("branch on a factored product") {
    BilinearSystem sys;
    sys.unknowns = {"u", "v"};
    sys.equations = {U(0) * U(1), U(0) + U(1) - C(1)};
    SolverOutcome out = bilinear_solve(sys, 1000);
    REQUIRE(out.solutions.size() == 2);
    CHECK(out.solutions[0] ==
          std::vector<GaussianRational>{GaussianRational(0), GaussianRational(1)});
    CHECK(out.solutions[1] ==
          std::vector<GaussianRational>{GaussianRational(1), GaussianRational(0)});
    CHECK_FALSE(out.budget_exceeded);
}

TEST_CASE("squared unknowns are rejected as non-bilinear") {
    BilinearSystem sys;
    sys.unknowns = {"u"};
    sys.equations = {U(0) * U(0) - C(4)};
    CHECK_THROWS_AS(bilinear_solve(sys, 100), non_bilinear_system);
}

TEST_CASE("odd cross-term cycles are rejected") {
    BilinearSystem sys;
    sys.unknowns = {"u", "v", "w"};
    sys.equations = {U(0) * U(1) + U(1) * U(2) + U(0) * U(2)};
    CHECK_THROWS_AS(bilinear_solve(sys, 100), non_bilinear_system);
}

TEST_CASE("internal solver enumerates quadratic roots over Q(i)") {
    PolySystemSolver solver(1, {U(0) * U(0) + C(1)}, 100);
    SolverOutcome out = solver.run();
    REQUIRE(out.solutions.size() == 2);
    CHECK(out.solutions[0][0] * out.solutions[0][0] == GaussianRational(-1));
    CHECK(out.solutions[1][0] == -out.solutions[0][0]);

    // No Q(i) root: u^2 = 3 has none, branch dies cleanly.
    PolySystemSolver none(1, {U(0) * U(0) - C(3)}, 100);
    CHECK(none.run().solutions.empty());
}

TEST_CASE("free unknowns are sampled at zero and one-hot points") {
    BilinearSystem sys;
    sys.unknowns = {"u", "v"};
    sys.equations = {U(0) + U(1) - C(1)};
    SolverOutcome out = bilinear_solve(sys, 100);
    REQUIRE(out.solutions.size() == 2);
    for (const auto& sol : out.solutions) CHECK(sol[0] + sol[1] == GaussianRational(1));
}

TEST_CASE("rational pivot splits on the coefficient") {
    // v*u - 1 = 0, v - 2 = 0  ->  v = 2, u = 1/2.
    BilinearSystem sys;
    sys.unknowns = {"u", "v"};
    sys.equations = {U(1) * U(0) - C(1), U(1) - C(2)};
    SolverOutcome out = bilinear_solve(sys, 100);
    REQUIRE(out.solutions.size() == 1);
    CHECK(out.solutions[0][0] == GaussianRational(1, 2));
    CHECK(out.solutions[0][1] == GaussianRational(2));
}

TEST_CASE("budget exhaustion is reported") {
    BilinearSystem sys;
    sys.unknowns = {"u", "v"};
    sys.equations = {U(0) * U(1) - C(1)};
    SolverOutcome out = bilinear_solve(sys, 1);
    CHECK(out.budget_exceeded);
}

TEST_CASE("determinism") {
    BilinearSystem sys;
    sys.unknowns = {"u", "v", "w"};
    sys.equations = {U(0) * U(1) - U(2), U(0) + U(1) - C(3), U(2) - C(2)};
    SolverOutcome a = bilinear_solve(sys, 1000);
    SolverOutcome b = bilinear_solve(sys, 1000);
    CHECK(a.solutions == b.solutions);
    REQUIRE(a.solutions.size() == 2);  // (1,2) and (2,1)
}

TEST_CASE("factor: expanded product of atoms") {
    MultiPoly p = P("x*y*z*(x - y)*(z*x - y)");
    Factorization f = poly_factor_limited(p, 2);
    REQUIRE(f.parts.size() == 5);
    CHECK(f.remultiplied() == p);
    std::vector<MultiPoly> expected = {P("y"), P("x"), P("z"), P("x - y"), P("z*x - y")};
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& part : f.parts)
            if (part.factor == e.monic() && part.multiplicity == 1 &&
                !part.possibly_reducible)
                found = true;
        CHECK(found);
    }
}

TEST_CASE("factor: conjugate split over Q(i)") {
    MultiPoly p = P("x^2 + 4*x*y*z + 4*y^2*z^2 + 4*y^4");
    Factorization f = poly_factor_limited(p, 2);
    REQUIRE(f.parts.size() == 2);
    CHECK(f.remultiplied() == p);
    MultiPoly plus = P("x + 2*y*z + 2*i*y^2").monic();
    MultiPoly minus = P("x + 2*y*z - 2*i*y^2").monic();
    CHECK(((f.parts[0].factor == plus && f.parts[1].factor == minus) ||
           (f.parts[0].factor == minus && f.parts[1].factor == plus)));
    CHECK_FALSE(f.parts[0].possibly_reducible);
    CHECK_FALSE(f.parts[1].possibly_reducible);
}

TEST_CASE("factor: already irreducible") {
    Factorization f = poly_factor_limited(P("x - y"), 2);
    REQUIRE(f.parts.size() == 1);
    CHECK(f.parts[0].factor == P("x - y"));
    CHECK(f.parts[0].multiplicity == 1);
    CHECK_FALSE(f.parts[0].possibly_reducible);
}

TEST_CASE("factor: multiplicities") {
    MultiPoly p = P("y^2*(x - y)^3");
    Factorization f = poly_factor_limited(p, 2);
    CHECK(f.remultiplied() == p);
    REQUIRE(f.parts.size() == 2);
    for (const auto& part : f.parts) {
        if (part.factor == P("y")) CHECK(part.multiplicity == 2);
        if (part.factor == P("x - y")) CHECK(part.multiplicity == 3);
    }
}

TEST_CASE("factor: remultiplication on random products") {
    liesym::test::Rng rng(41);
    for (int k = 0; k < 40; ++k) {
        MultiPoly p = rng.nonzero_poly(2, 1);
        MultiPoly q = rng.nonzero_poly(2, 1);
        MultiPoly r = rng.nonzero_poly(3, 2);
        MultiPoly prod = p * q * r;
        if (prod.is_zero() || prod.is_constant()) continue;
        Factorization f = poly_factor_limited(prod, 2);
        CHECK(f.remultiplied() == prod);
    }
}

TEST_CASE("factor: denominator of the second worked S-function") {
    // 4 y^3 (-y + z x + 2 y z^2 + 2 i y^2 z): the non-atomic factor stays in
    // one certified piece at the default bound.
    MultiPoly p = P("4*y^3*(-y + z*x + 2*y*z^2 + 2*i*y^2*z)");
    Factorization f = poly_factor_limited(p, 2);
    CHECK(f.remultiplied() == p);
    bool found = false;
    for (const auto& part : f.parts)
        if (part.factor == P("-y + z*x + 2*y*z^2 + 2*i*y^2*z").monic()) {
            found = true;
            CHECK(part.multiplicity == 1);
        }
    CHECK(found);
}

#include "doctest.h"

#include "ccw/cochain.hpp"
#include "ccw/errors.hpp"
#include "ccw/linprog.hpp"
#include "ccw/theta.hpp"

using namespace ccw;

TEST_CASE("the class norm of the central cochain is attained at zero shift") {
    if (!lp_solver_built()) {
        CHECK_THROWS_AS(min_sup_norm_over_coboundaries(theta_vector()), SolverNotBuilt);
        return;
    }
    const ChebyshevResult r = min_sup_norm_over_coboundaries(theta_vector());
    CHECK(r.value == Rational(2, 3));
    CHECK(r.minimizer.degree() == 3);
    CHECK((theta_vector() + apply_delta(r.minimizer)).sup_norm() == Rational(2, 3));
}

TEST_CASE("scaling the input scales the optimum") {
    if (!lp_solver_built()) return;
    const ChebyshevResult r = min_sup_norm_over_coboundaries(Rational(2) * theta_vector());
    CHECK(r.value == Rational(4, 3));
}

TEST_CASE("coboundaries minimize to zero") {
    if (!lp_solver_built()) return;
    for (std::uint64_t seed : {101u, 102u}) {
        const CochainVector db = apply_delta(random_cochain(3, Mode::HTwisted, seed));
        const ChebyshevResult r = min_sup_norm_over_coboundaries(db);
        CHECK(r.value == 0);
        CHECK((db + apply_delta(r.minimizer)).is_zero());
    }
}

TEST_CASE("with no coboundaries available the optimum is the sup norm itself") {
    if (!lp_solver_built()) return;
    // Degree-3 twisted inputs shift by coboundaries of degree-2 twisted
    // cochains, and that space is zero-dimensional.
    const CochainVector f = random_cochain(3, Mode::HTwisted, 15);
    REQUIRE(basis(2, Mode::HTwisted).empty());
    const ChebyshevResult r = min_sup_norm_over_coboundaries(f);
    CHECK(r.value == f.sup_norm());
    CHECK(r.minimizer.is_zero());
}

TEST_CASE("the optimum is never larger than the plain sup norm") {
    if (!lp_solver_built()) return;
    for (std::uint64_t seed : {7u, 8u}) {
        const CochainVector f = random_cochain(4, Mode::HTwisted, seed);
        const ChebyshevResult r = min_sup_norm_over_coboundaries(f);
        CHECK(r.value <= f.sup_norm());
        CHECK((f + apply_delta(r.minimizer)).sup_norm() == r.value);
    }
}

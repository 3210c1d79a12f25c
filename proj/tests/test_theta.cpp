#include "doctest.h"

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ccw/cochain.hpp"
#include "ccw/enumerate.hpp"
#include "ccw/errors.hpp"
#include "ccw/orbits.hpp"
#include "ccw/textio.hpp"
#include "ccw/theta.hpp"

using namespace ccw;

TEST_CASE("pinwheel configuration attains value 2/3") {
    const Configuration& c = extremal_config();
    CHECK(to_string(c) == "X=[0,1,2,3,4];Y=[0,2,4,1,3]");
    CHECK(theta(c) == Rational(2, 3));
    CHECK(theta_full(c) == Rational(2, 3));
    CHECK(theta30(c.x.ranks.data(), c.y.ranks.data()) == 20);
}

TEST_CASE("orientation product cochains on 3-point configurations") {
    const Configuration c = parse_config("X=[0,1,2];Y=[0,2,1]");
    CHECK(or1(c) == 1);
    CHECK(or2(c) == -1);
    const Configuration d = parse_config("X=[0,0,1];Y=[0,1,2]");
    CHECK(or1(d) == 0);
    CHECK(or2(d) == 1);
}

TEST_CASE("reduced 30-term expansion equals the 120-term alternation everywhere") {
    for_each_configuration(5, [&](const Configuration& c) {
        const Rational r = theta(c);
        CHECK(r == theta_full(c));
        CHECK(r == Rational(theta30(c.x.ranks.data(), c.y.ranks.data()), 30));
    });
}

TEST_CASE("integer kernel accepts raw non-contiguous rank windows") {
    // Dropping one coordinate of a 6-point type without relabeling ranks
    // must give the same value as the compressed face type.
    std::int64_t step = 0;
    for_each_configuration(6, [&](const Configuration& c) {
        if (step++ % 9973 != 0) return;
        for (int i = 0; i < 6; ++i) {
            int xs[5], ys[5];
            int k = 0;
            for (int j = 0; j < 6; ++j) {
                if (j == i) continue;
                xs[k] = c.x.ranks[static_cast<std::size_t>(j)];
                ys[k] = c.y.ranks[static_cast<std::size_t>(j)];
                ++k;
            }
            CHECK(Rational(theta30(xs, ys), 30) == theta(face(c, i)));
        }
    });
}

TEST_CASE("symmetry behavior: alternating, reflection-odd, swap-even") {
    std::int64_t step = 0;
    for_each_configuration(5, [&](const Configuration& c) {
        if (step++ % 211 != 0) return;
        const Rational v = theta(c);
        CHECK(theta(permuted(c, {1, 0, 2, 3, 4})) == -v);
        CHECK(theta(permuted(c, {1, 2, 3, 4, 0})) == v);  // 5-cycle is even
        CHECK(theta(reflected_x(c)) == -v);
        CHECK(theta(reflected_y(c)) == -v);
        CHECK(theta(swapped(c)) == v);
    });
}

TEST_CASE("invariant vector form agrees with direct evaluation") {
    const CochainVector& v = theta_vector();
    CHECK(v.degree() == 4);
    CHECK(v.mode() == Mode::HTwisted);
    CHECK(v.basis_size() == 26);
    std::int64_t step = 0;
    for_each_configuration(5, [&](std::int64_t index, const Configuration& c) {
        if (step++ % 173 != 0) return;
        CHECK(v.evaluate(c) == theta(c));
        CHECK(v.evaluate_index(index) == theta(c));
    });
}

TEST_CASE("exhaustive sup-norm certificate matches the certified distribution") {
    const NormCertificate cert = theta_norm_certificate();
    CHECK(cert.config_count == 22500);
    CHECK(cert.sup == Rational(2, 3));
    const std::map<int, std::int64_t> expected = {
        {0, 11124}, {5, 8520}, {10, 2208}, {15, 600}, {20, 48}};
    CHECK(cert.histogram == expected);
    CHECK(cert.argmax.size() == 48);

    // The maximizers form a single free symmetry orbit containing the
    // pinwheel configuration.
    const OrbitTable& table = orbit_table(5, Mode::HTwisted);
    std::set<std::int32_t> orbits;
    bool extremal_seen = false;
    for (const Configuration& c : cert.argmax) {
        orbits.insert(table.orbit_of[static_cast<std::size_t>(configuration_index(c))]);
        if (c == extremal_config()) extremal_seen = true;
    }
    CHECK(orbits.size() == 1);
    CHECK(extremal_seen);
    CHECK_FALSE(table.orbits[static_cast<std::size_t>(*orbits.begin())].forced_zero);
    CHECK(table.orbits[static_cast<std::size_t>(*orbits.begin())].size == 48);

    // Orbit-level sup agrees with the exhaustive scan.
    CHECK(theta_vector().sup_norm() == cert.sup);
}

TEST_CASE("fault injection shifts the scanned distribution") {
    const NormCertificate cert = theta_norm_certificate(extremal_config());
    CHECK(cert.sup == Rational(5, 3));  // 2/3 + 1 on the corrupted orbit
    CHECK(cert.histogram.count(20) == 0);
    CHECK(cert.histogram.at(50) == 48);
    CHECK(cert.config_count == 22500);
}

TEST_CASE("coboundary vanishes on a deterministic sample of 6-point types") {
    const CocycleReport report = verify_theta_cocycle_sampled(10000, 42);
    CHECK(report.checked == 10000);
    CHECK(report.failures == 0);
    CHECK(report.ok());
    CHECK_FALSE(report.first_failure.has_value());

    // Same seed, same draw; the scan is deterministic.
    const CocycleReport again = verify_theta_cocycle_sampled(10000, 42);
    CHECK(again.checked == report.checked);
}

TEST_CASE("fault injection breaks the cocycle scan") {
    CocycleScanOptions opts;
    opts.jobs = 2;
    opts.corrupt_at = extremal_config();
    const CocycleReport report = verify_theta_cocycle(opts);
    CHECK(report.failures > 0);
    CHECK_FALSE(report.ok());
    CHECK(report.first_failure.has_value());
}

TEST_CASE("corner values of the central cochain") {
    const LambdaProfile p = lambda_profile(theta_vector());
    CHECK(p.l0 == 0);
    CHECK(p.l1 == Rational(1, 6));
    CHECK(p.l2 == Rational(1, 6));
    CHECK(p.l3 == Rational(1, 6));
    CHECK(p.l4 == Rational(1, 6));
    CHECK(p.functional() == 1);

    // The same profile through the raw function route.
    const LambdaProfile q = lambda_profile(TypeFunction([](const Configuration& c) {
        return theta(c);
    }));
    CHECK(q.l1 == p.l1);
    CHECK(q.functional() == 1);
}

TEST_CASE("corner configurations and signs match their defining displays") {
    CHECK(to_string(lambda_config(0)) == "X=[0,0,1,1,2];Y=[0,1,0,1,2]");
    CHECK(to_string(lambda_config(1)) == "X=[0,1,2,2,2];Y=[0,0,0,1,2]");
    CHECK(to_string(lambda_config(2)) == "X=[0,1,1,2,2];Y=[0,0,1,1,2]");
    CHECK(to_string(lambda_config(3)) == "X=[0,1,1,1,2];Y=[0,0,1,2,2]");
    CHECK(to_string(lambda_config(4)) == "X=[0,0,1,2,2];Y=[0,1,1,1,2]");
    for (int k = 0; k < 5; ++k) CHECK(lambda_sign(k) == (k == 2 ? -1 : 1));
}

TEST_CASE("the six-point identity ties the corners to the coboundary") {
    CHECK(to_string(lambda_identity_config()) == "X=[0,1,1,2,2,2];Y=[0,0,1,1,2,0]");
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const CochainVector f = random_cochain(4, Mode::HTwisted, seed);
        const LambdaProfile p = lambda_profile(f);
        CHECK(delta_at(f.as_function(), lambda_identity_config()) ==
              p.l1 + p.l2 - p.l3 - p.l4);
    }
}

TEST_CASE("the corner functional annihilates every coboundary") {
    // Row-times-matrix identity over the twisted bases.
    const auto row = lambda_functional_row(Mode::HTwisted);
    const Matrix d3 = delta_matrix(3, Mode::HTwisted);
    REQUIRE(row.size() == d3.size());
    const std::size_t cols = d3.empty() ? 0 : d3[0].size();
    for (std::size_t jc = 0; jc < cols; ++jc) {
        Rational dot = 0;
        for (std::size_t i = 0; i < row.size(); ++i) dot += row[i] * d3[i][jc];
        CHECK(dot == 0);
    }

    // Pointwise double check on random coboundaries.
    for (std::uint64_t seed = 21; seed <= 24; ++seed) {
        const CochainVector b = random_cochain(3, Mode::HTwisted, seed);
        CHECK(lambda_profile(apply_delta(b)).functional() == 0);
    }
}

TEST_CASE("corner functional of the invariant vector via the row form") {
    const auto row = lambda_functional_row(Mode::HTwisted);
    const CochainVector& v = theta_vector();
    REQUIRE(row.size() == v.basis_size());
    Rational dot = 0;
    for (std::size_t i = 0; i < row.size(); ++i) dot += row[i] * v.coeff(i);
    CHECK(dot == 1);
}

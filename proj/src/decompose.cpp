#include "ccw/decompose.hpp"

#include <utility>
#include <vector>

#include "ccw/enumerate.hpp"
#include "ccw/errors.hpp"
#include "ccw/textio.hpp"

namespace ccw {

namespace {

// Prepend the point (xv, yv) to a configuration (rank values taken from the
// configuration's own factors, so contiguity is preserved; evaluation
// canonicalizes).
Configuration prepended(const Configuration& c, int xv, int yv) {
    std::vector<int> xr;
    std::vector<int> yr;
    xr.reserve(c.length() + 1);
    yr.reserve(c.length() + 1);
    xr.push_back(xv);
    yr.push_back(yv);
    xr.insert(xr.end(), c.x.ranks.begin(), c.x.ranks.end());
    yr.insert(yr.end(), c.y.ranks.begin(), c.y.ranks.end());
    return Configuration(std::move(xr), std::move(yr));
}

// Index pairs i < j with equal entries in `ranks`.
std::vector<std::pair<int, int>> coincidence_pairs(const std::vector<int>& ranks) {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(ranks.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (ranks[i] == ranks[j]) out.emplace_back(i, j);
    return out;
}

void require_degree(const CochainVector& f, int degree, const char* who) {
    if (f.degree() != degree || f.mode() != Mode::HTwisted)
        throw Error(std::string(who) + ": expects a degree-" + std::to_string(degree) +
                    " twisted cochain");
}

}  // namespace

CochainVector build_h1(const CochainVector& f) {
    require_degree(f, 4, "build_h1");
    TypeFunction fn = [f](const Configuration& c) -> Rational {
        const auto xpairs = coincidence_pairs(c.x.ranks);
        const auto ypairs = coincidence_pairs(c.y.ranks);
        if (xpairs.empty() || ypairs.empty()) return Rational(0);
        bool have = false;
        Rational value(0);
        for (const auto& xp : xpairs) {
            for (const auto& yp : ypairs) {
                const Rational v = f.evaluate(prepended(c, c.x.ranks[xp.first], c.y.ranks[yp.first]));
                if (!have) {
                    value = v;
                    have = true;
                } else if (v != value) {
                    throw WellDefinednessViolation(
                        "h1: conflicting coincidence choices at " + to_string(c));
                }
            }
        }
        return value;
    };
    return project_function(3, Mode::HTwisted, fn, /*verify_invariance=*/true);
}

CochainVector build_h2(const CochainVector& f1) {
    require_degree(f1, 4, "build_h2");
    TypeFunction fn = [f1](const Configuration& c) -> Rational {
        bool have = false;
        Rational value(0);
        auto take = [&](const Rational& v) {
            if (!have) {
                value = v;
                have = true;
            } else if (v != value) {
                throw WellDefinednessViolation("h2: conflicting clause values at " + to_string(c));
            }
        };
        const Rational half(1, 2);
        for (const auto& [i, j] : coincidence_pairs(c.x.ranks)) {
            std::vector<int> rest;
            for (int t = 0; t < 4; ++t)
                if (t != i && t != j) rest.push_back(t);
            const int xv = c.x.ranks[i];
            take(half * (f1.evaluate(prepended(c, xv, c.y.ranks[rest[0]])) +
                         f1.evaluate(prepended(c, xv, c.y.ranks[rest[1]]))));
        }
        for (const auto& [i, j] : coincidence_pairs(c.y.ranks)) {
            std::vector<int> rest;
            for (int t = 0; t < 4; ++t)
                if (t != i && t != j) rest.push_back(t);
            const int yv = c.y.ranks[i];
            take(half * (f1.evaluate(prepended(c, c.x.ranks[rest[0]], yv)) +
                         f1.evaluate(prepended(c, c.x.ranks[rest[1]], yv))));
        }
        return value;
    };
    return project_function(3, Mode::HTwisted, fn, /*verify_invariance=*/true);
}

CochainVector build_h3(const CochainVector& f2) {
    require_degree(f2, 4, "build_h3");
    TypeFunction fn = [f2](const Configuration& c) -> Rational {
        Rational sum(0);
        bool have = false;
        Rational common(0);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                const Rational v = f2.evaluate(prepended(c, c.x.ranks[i], c.y.ranks[j]));
                sum += v;
                if (i != j) {
                    if (!have) {
                        common = v;
                        have = true;
                    } else if (v != common) {
                        throw ClaimViolation("h3: off-diagonal insertions disagree at " +
                                             to_string(c));
                    }
                }
            }
        }
        return sum / Rational(12);
    };
    return project_function(3, Mode::HTwisted, fn, /*verify_invariance=*/true);
}

CochainVector DecompositionReport::primitive() const {
    CochainVector b = h1;
    b += h2;
    b += h3;
    return b;
}

DecompositionReport decompose(const CochainVector& f) {
    require_degree(f, 4, "decompose");
    if (!apply_delta(f).is_zero())
        throw NotACocycle("decompose: input has nonzero boundary");
    const LambdaProfile lam = lambda_profile(f);
    if (lam.functional() != 0)
        throw PreconditionLambda("decompose: corner functional is " +
                                 rational_to_string(lam.functional()) + ", expected 0");

    DecompositionReport report{f,
                               CochainVector(3, Mode::HTwisted),
                               CochainVector(3, Mode::HTwisted),
                               CochainVector(3, Mode::HTwisted),
                               false,
                               false,
                               false,
                               false,
                               std::nullopt,
                               lam,
                               LambdaProfile{}};

    // Stage checks scan every 5-point configuration and classify by the
    // distinct-count pair of its type.
    auto first_violation = [](const CochainVector& g,
                              auto&& applies) -> std::optional<Configuration> {
        std::optional<Configuration> found;
        for_each_configuration(5, [&](std::int64_t index, const Configuration& c) {
            if (found) return;
            const auto [n1, n2] = counts(c);
            if (applies(n1, n2) && g.evaluate_index(index) != 0) found = c;
        });
        return found;
    };

    report.h1 = build_h1(f);
    CochainVector f1 = f;
    f1 -= apply_delta(report.h1);
    report.lambda_after_stage1 = lambda_profile(f1);
    if (auto bad = first_violation(f1, [](int n1, int n2) { return n1 == 3 && n2 == 3; })) {
        report.counterexample = *bad;
        return report;
    }
    report.stage1_vanishes = true;

    report.h2 = build_h2(f1);
    CochainVector f2 = f1;
    f2 -= apply_delta(report.h2);
    if (auto bad = first_violation(f2, [](int n1, int n2) { return n1 + n2 <= 7; })) {
        report.counterexample = *bad;
        return report;
    }
    report.stage2_vanishes = true;

    report.h3 = build_h3(f2);
    CochainVector f3 = f2;
    f3 -= apply_delta(report.h3);
    if (!f3.is_zero()) {
        report.counterexample = first_violation(f3, [](int, int) { return true; });
        return report;
    }
    report.stage3_zero = true;

    CochainVector check = apply_delta(report.primitive());
    check -= f;
    report.final_exact = check.is_zero();
    return report;
}

}  // namespace ccw

// Acceptance harness: nine certified claims, one line of output each.
// Exits 0 only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ccw/certificate.hpp"
#include "ccw/cochain.hpp"
#include "ccw/decompose.hpp"
#include "ccw/enumerate.hpp"
#include "ccw/errors.hpp"
#include "ccw/halfplane.hpp"
#include "ccw/invariants.hpp"
#include "ccw/pairing.hpp"
#include "ccw/textio.hpp"
#include "ccw/theta.hpp"
#include "ccw/transfer.hpp"

using namespace ccw;

namespace {

void check(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

std::string rstr(const Rational& r) { return rational_to_string(r); }

// ---------------------------------------------------------------- criteria

std::string criterion_norm() {
    const NormCertificate cert = theta_norm_certificate();
    check(cert.config_count == 22500,
          "expected 22500 types, scanned " + std::to_string(cert.config_count));
    check(cert.sup == Rational(2, 3), "sup norm is " + rstr(cert.sup) + ", expected 2/3");
    bool extremal_found = false;
    const std::string extremal = to_string(extremal_config());
    for (const Configuration& c : cert.argmax) extremal_found |= (to_string(c) == extremal);
    check(extremal_found, "the distinguished maximizer is missing from the argmax list");
    check(cert.argmax.size() == 48,
          "expected 48 maximizers, found " + std::to_string(cert.argmax.size()));
    return "22500 types scanned, sup 2/3 attained at the distinguished type (48 maximizers)";
}

std::string criterion_two_routes() {
    std::int64_t checked = 0;
    for_each_configuration(5, [&](const Configuration& c) {
        check(theta_full(c) == theta(c),
              "route mismatch at " + to_string(c));
        ++checked;
    });
    check(checked == 22500, "scan covered " + std::to_string(checked) + " types");
    return "120-term and 30-term evaluations agree on all 22500 types";
}

std::string criterion_cocycle() {
    const unsigned hw = std::thread::hardware_concurrency();
    CocycleScanOptions opts;
    opts.jobs = hw ? static_cast<int>(hw) : 2;
    const CocycleReport full = verify_theta_cocycle(opts);
    check(full.checked == 1170724,
          "full scan covered " + std::to_string(full.checked) + " types");
    check(full.ok(), "coboundary failed on " + std::to_string(full.failures) + " types");

    const CocycleReport sampled = verify_theta_cocycle_sampled(10000, 20260822);
    check(sampled.checked == 10000 && sampled.ok(), "sampled rescan failed");
    return "coboundary vanishes on all 1170724 six-point types (full scan, " +
           std::to_string(opts.jobs) + " jobs) and on a 10000-type sample";
}

std::string criterion_class_norm() {
    const ClassNormCertificate cert = class_norm_certificate_theta(100, 7);
    check(cert.ok(), "certificate incomplete");
    check(cert.value == Rational(2, 3), "extremal value " + rstr(cert.value));
    check(cert.faces_crossed_chords == 5 && cert.faces_forced == 5,
          "face predicates did not cover all five faces");
    check(cert.trials_matching == 100, "a coboundary shift moved the extremal value");
    return "all 5 faces crossed-chord + forced-zero; value 2/3 unmoved by 100 seeded shifts";
}

std::string criterion_transfer() {
    for (const int q : {3, 4}) {
        const std::size_t dim = basis(q, Mode::HTwisted).size();
        for (std::size_t i = 0; i < dim; ++i) {
            CochainVector e(q, Mode::HTwisted);
            e.coeff(i) = 1;
            check((transfer_m(include_untwisted(e)) - e).is_zero(),
                  "identity fails on twisted basis vector " + std::to_string(i) +
                      " in degree " + std::to_string(q));
        }
    }
    const CochainVector t = theta_vector();
    check((transfer_m(include_untwisted(t)) - t).is_zero(), "the central cochain moved");
    const CochainVector o =
        project_function(2, Mode::GUntwisted, TypeFunction(or1), true);
    check(transfer_m(o).is_zero(), "single-factor orientation survived the transfer");
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const int q = (seed % 2) ? 3 : 4;
        const CochainVector f = random_cochain(q, Mode::GUntwisted, seed);
        check(transfer_m(f).sup_norm() <= f.sup_norm(),
              "norm grew at trial " + std::to_string(seed));
    }
    return "identity on 2+26 twisted basis vectors; fixes the central cochain; kills "
           "one-factor orientation; norm non-increasing on 50 trials";
}

std::string criterion_surface() {
    const SurfaceGroupData g = octagon_group();
    const GroupChain z = genus2_cycle(g);
    check(pair_orientation(z, g) == 4, "orientation pairing is not 4");
    const auto claims = claim_orientation_values(g);
    for (const int v : claims) check(v == 1, "a claim summand is not +1");

    const GroupChain zz = product_chain(z, z);
    for (const ChainTerm& term : zz.terms)
        term_configuration(term.points, g.base_point);  // must not raise

    const Rational paired = pair_chain(theta_vector().as_function(), zz, g);
    check(paired == 16, "product pairing is " + rstr(paired));
    const Rational lam = lambda_profile(theta_vector()).functional();
    check(paired == Rational(16) * lam, "corner-functional route disagrees");
    return "orientation pairing 4 (claims +1,+1,+1,+1); product pairing 16 = 16 x "
           "corner functional; all 216 reductions unambiguous";
}

std::string criterion_lambda() {
    const LambdaProfile p = lambda_profile(theta_vector());
    check(p.l0 == 0, "l0 is " + rstr(p.l0));
    check(p.l3 == p.l4, "l3 != l4");
    check(p.l1 + p.l2 == 2 * p.l3, "l1 + l2 != 2 l3");
    check(p.functional() == 1, "corner functional is " + rstr(p.functional()));

    const std::vector<Rational> row = lambda_functional_row(Mode::HTwisted);
    const Matrix d3 = delta_matrix(3, Mode::HTwisted);
    check(row.size() == d3.size(), "row length mismatch");
    for (std::size_t col = 0; col < d3[0].size(); ++col) {
        Rational dot = 0;
        for (std::size_t i = 0; i < d3.size(); ++i) dot += row[i] * d3[i][col];
        check(dot == 0, "functional does not annihilate coboundary column " +
                            std::to_string(col));
    }
    return "profile (0, 1/6, 1/6, 1/6, 1/6); functional 1 on the class, 0 on every "
           "coboundary (matrix identity)";
}

std::string criterion_decompose() {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const CochainVector f = apply_delta(random_cochain(3, Mode::HTwisted, seed));
        const DecompositionReport rep = decompose(f);
        check(rep.final_ok(), "decomposition failed at seed " + std::to_string(seed));
        check((apply_delta(rep.primitive()) - f).is_zero(),
              "primitive is inexact at seed " + std::to_string(seed));
    }

    const Matrix d4 = delta_matrix(4, Mode::HTwisted);
    const auto kernel = kernel_basis(d4);
    check(kernel.size() == 3, "kernel dimension is " + std::to_string(kernel.size()));
    const std::vector<Rational> row = lambda_functional_row(Mode::HTwisted);
    Matrix functional_on_kernel(1);
    for (const auto& k : kernel) {
        Rational dot = 0;
        for (std::size_t j = 0; j < k.size(); ++j) dot += row[j] * k[j];
        functional_on_kernel[0].push_back(dot);
    }
    const auto combos = kernel_basis(functional_on_kernel);
    check(combos.size() == 2, "decomposable slice has dimension " +
                                  std::to_string(combos.size()));
    int decomposed = 0;
    for (const auto& combo : combos) {
        CochainVector v(4, Mode::HTwisted);
        for (std::size_t kidx = 0; kidx < kernel.size(); ++kidx)
            for (std::size_t j = 0; j < v.basis_size(); ++j)
                v.coeff(j) += combo[kidx] * kernel[kidx][j];
        if (v.is_zero()) continue;
        const DecompositionReport rep = decompose(v);
        check(rep.final_ok(), "a kernel-slice vector failed to decompose");
        ++decomposed;
    }
    return "100 seeded coboundaries decomposed exactly; kernel slice (dim 2) decomposed (" +
           std::to_string(decomposed) + " nonzero vectors)";
}

std::string criterion_invariants() {
    const InvariantsReport r22 = invariants_report(2, 2);
    check(r22.product_norm == 24, "(2,2) norm is " + std::to_string(r22.product_norm));
    check(r22.product_norm == 6 * r22.euler, "(2,2) norm is not six times Euler");
    check(r22.product_formula == Rational(r22.product_norm),
          "(2,2) three-halves product formula disagrees");
    check(r22.consistent(), "(2,2) cross-checks failed");
    check(invariants_report(3, 2).product_norm == 48, "(3,2) norm wrong");
    check(invariants_report(5, 4).product_norm == 288, "(5,4) norm wrong");
    return "(2,2) -> 24 (= 6 Euler = 3/2 product), (3,2) -> 48, (5,4) -> 288";
}

}  // namespace

int main() {
    struct Criterion {
        const char* title;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria = {
        {"exhaustive sup-norm certificate", criterion_norm},
        {"two evaluation routes agree everywhere", criterion_two_routes},
        {"coboundary vanishes (full + sampled)", criterion_cocycle},
        {"class-norm lower-bound certificate", criterion_class_norm},
        {"averaging transfer", criterion_transfer},
        {"genus-2 surface pairings", criterion_surface},
        {"corner functional", criterion_lambda},
        {"constructive coboundary decomposition", criterion_decompose},
        {"product-manifold invariants", criterion_invariants},
    };

    int passed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = criteria[i].run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%zu/9] %s  %s: %s  (%.2f s)\n", i + 1, ok ? "PASS" : "FAIL",
                    criteria[i].title, detail.c_str(), seconds);
        std::fflush(stdout);
        passed += ok ? 1 : 0;
    }
    std::printf("%d/9 criteria passed\n", passed);
    return passed == 9 ? 0 : 1;
}

#include "ccw/certificate.hpp"

#include <string>

#include "ccw/errors.hpp"
#include "ccw/orbits.hpp"
#include "ccw/textio.hpp"

namespace ccw {

namespace {

using nlohmann::ordered_json;

std::string rstr(const Rational& r) { return rational_to_string(r); }

}  // namespace

ClassNormCertificate class_norm_certificate_theta(
    int random_trials, std::uint64_t seed,
    const std::optional<Configuration>& extremal_override) {
    ClassNormCertificate cert;
    cert.extremal = extremal_override ? canonical(*extremal_override) : extremal_config();
    validate(cert.extremal);
    if (cert.extremal.length() != 5)
        throw CertificateFailure("class norm: the extremal configuration must have 5 points");
    cert.random_trials = random_trials;
    cert.seed = seed;
    cert.faces_total = 5;

    // Lower-bound mechanism: every face of the extremal tuple must satisfy
    // the crossed-chords criterion, and (equivalently, at orbit level) land
    // in a sign-forced orbit, so delta(b) vanishes at the extremal tuple for
    // every twisted 3-cochain b.
    for (int i = 0; i < 5; ++i) {
        const Configuration f = face(cert.extremal, i);
        if (lemma_crossed_chords_applies(f)) ++cert.faces_crossed_chords;
        if (forced_zero(f, Mode::HTwisted)) ++cert.faces_forced;
    }
    if (cert.faces_crossed_chords != cert.faces_total)
        throw CertificateFailure("class norm: crossed-chords predicate holds on only " +
                                 std::to_string(cert.faces_crossed_chords) + " of 5 faces of " +
                                 to_string(cert.extremal));
    if (cert.faces_forced != cert.faces_total)
        throw CertificateFailure("class norm: only " + std::to_string(cert.faces_forced) +
                                 " of 5 faces lie in sign-forced orbits");

    // Upper bound: the chosen configuration must achieve the sup norm.
    cert.value = rational_abs(theta(cert.extremal));
    if (theta_vector().sup_norm() != cert.value)
        throw CertificateFailure("class norm: configuration value " + rstr(cert.value) +
                                 " does not achieve the sup norm");

    // Spot check: coboundaries cannot move the value at the extremal tuple.
    const Rational base = theta(cert.extremal);
    for (int k = 0; k < random_trials; ++k) {
        const CochainVector b = random_cochain(3, Mode::HTwisted, seed + static_cast<std::uint64_t>(k));
        const Rational shifted = rational_abs(base + apply_delta(b).evaluate(cert.extremal));
        if (shifted != cert.value)
            throw CertificateFailure("class norm: trial " + std::to_string(k) +
                                     " moved the extremal value to " + rstr(shifted));
        ++cert.trials_matching;
    }
    return cert;
}

ordered_json norm_certificate_json(const NormCertificate& cert) {
    ordered_json j;
    j["kind"] = "sup-norm";
    j["configuration_count"] = cert.config_count;
    j["sup_norm"] = rstr(cert.sup);
    ordered_json hist = ordered_json::object();
    for (const auto& [v30, count] : cert.histogram) hist[rstr(Rational(v30, 30))] = count;
    j["abs_value_histogram"] = hist;
    j["argmax_count"] = cert.argmax.size();
    ordered_json am = ordered_json::array();
    for (const auto& c : cert.argmax) am.push_back(to_string(c));
    j["argmax"] = am;
    return j;
}

ordered_json class_norm_certificate_json(const ClassNormCertificate& cert) {
    ordered_json j;
    j["kind"] = "class-norm";
    j["value"] = rstr(cert.value);
    j["extremal"] = to_string(cert.extremal);
    j["faces_total"] = cert.faces_total;
    j["faces_crossed_chords"] = cert.faces_crossed_chords;
    j["faces_forced"] = cert.faces_forced;
    j["random_trials"] = cert.random_trials;
    j["seed"] = cert.seed;
    j["trials_matching"] = cert.trials_matching;
    j["ok"] = cert.ok();
    return j;
}

ordered_json cocycle_report_json(const CocycleReport& report, bool sampled,
                                 std::optional<std::uint64_t> seed) {
    ordered_json j;
    j["kind"] = "cocycle";
    j["scan"] = sampled ? "sampled" : "full";
    if (seed)
        j["seed"] = *seed;
    else
        j["seed"] = nullptr;
    j["checked"] = report.checked;
    j["failures"] = report.failures;
    if (report.first_failure)
        j["first_failure"] = to_string(*report.first_failure);
    else
        j["first_failure"] = nullptr;
    j["ok"] = report.ok();
    return j;
}

namespace {

ordered_json lambda_json(const LambdaProfile& p) {
    return ordered_json{{"l0", rstr(p.l0)},
                        {"l1", rstr(p.l1)},
                        {"l2", rstr(p.l2)},
                        {"l3", rstr(p.l3)},
                        {"l4", rstr(p.l4)},
                        {"functional", rstr(p.functional())}};
}

}  // namespace

ordered_json decomposition_report_json(const DecompositionReport& report) {
    ordered_json j;
    j["kind"] = "decomposition";
    j["stage1_vanishes"] = report.stage1_vanishes;
    j["stage2_vanishes"] = report.stage2_vanishes;
    j["stage3_zero"] = report.stage3_zero;
    j["final_exact"] = report.final_exact;
    j["ok"] = report.final_ok();
    if (report.counterexample)
        j["counterexample"] = to_string(*report.counterexample);
    else
        j["counterexample"] = nullptr;
    j["lambda_before"] = lambda_json(report.lambda_before);
    j["lambda_after_stage1"] = lambda_json(report.lambda_after_stage1);
    j["input"] = ordered_json::parse(cochain_to_json(report.input));
    j["primitive"] = ordered_json::parse(cochain_to_json(report.primitive()));
    return j;
}

ordered_json invariants_report_json(const InvariantsReport& report) {
    const bool both_high = report.genus_g >= 2 && report.genus_h >= 2;
    const long long pi2 =
        both_high ? 16LL * (report.genus_g - 1) * (report.genus_h - 1) : 0LL;
    ordered_json j;
    j["kind"] = "invariants";
    j["genus"] = ordered_json::array({report.genus_g, report.genus_h});
    j["euler_characteristic"] = report.euler;
    j["product_norm"] = report.product_norm;
    j["volume"] = ordered_json{{"pi_squared_coefficient", pi2}, {"float", report.volume}};
    j["milnor_wood_bound"] = rstr(report.milnor_wood);
    j["factor_norms"] = ordered_json::array({report.factor_norm_g, report.factor_norm_h});
    j["product_bracket"] = ordered_json::array({report.bracket_low, report.bracket_high});
    j["product_formula"] = rstr(report.product_formula);
    j["consistent"] = report.consistent();
    return j;
}

}  // namespace ccw

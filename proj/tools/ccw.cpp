// ccw — batch front end for the exact-arithmetic workbench.
//
// Subcommands:
//   cfg print [--config STR]                 type tables / one type's data
//   theta eval --config STR                  evaluate the central cochain
//   theta norm [--out FILE]                  exhaustive sup-norm certificate
//   verify cocycle [--sample N --seed S]     coboundary-vanishing scan
//   verify class-norm [--trials N --seed S]  class-norm certificate
//   verify transfer [--count N --seed S]     averaging-transfer checks
//   decompose --input F [--output F]         explicit coboundary primitive
//   surface pair-or [--generators F]         boundary pairing, degree 2
//   surface pair-theta [--generators F]      boundary pairing, degree 4
//   invariants --genus G H [--out FILE]      closed-formula calculator
//   suite NAME [options]                     run one or all named suites
//
// Exit codes: 0 = every check passed; 1 = a verification failed;
// 2 = usage or input error.  Certificates are JSON with all rationals as
// "p/q" strings; identical flags and seeds yield byte-identical output.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccw/certificate.hpp"
#include "ccw/cochain.hpp"
#include "ccw/config.hpp"
#include "ccw/decompose.hpp"
#include "ccw/enumerate.hpp"
#include "ccw/errors.hpp"
#include "ccw/halfplane.hpp"
#include "ccw/invariants.hpp"
#include "ccw/orbits.hpp"
#include "ccw/pairing.hpp"
#include "ccw/textio.hpp"
#include "ccw/theta.hpp"
#include "ccw/transfer.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ccw;

// Usage/input failures raised by the tool itself (exit code 2).
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit_json(const ordered_json& j, const std::string& path) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open output file: " + path);
    out << text;
    if (!out.good()) throw InputError("failed writing output file: " + path);
}

std::optional<Configuration> parse_fault_target(const std::string& text) {
    if (text.empty()) return std::nullopt;
    Configuration c = parse_config(text);
    if (c.length() != 5)
        throw InputError("fault-injection target must be a 5-point configuration");
    return c;
}

// One suite's result: pass/fail, its JSON certificate, a one-line summary.
struct Outcome {
    bool ok = false;
    ordered_json cert;
    std::string line;
};

// ------------------------------------------------------------------ norm ---

Outcome run_norm(const std::optional<Configuration>& corrupt) {
    Outcome o;
    const NormCertificate cert = theta_norm_certificate(corrupt);

    // The certified values: 22 500 types, sup 2/3 attained on a single free
    // orbit of 48 types containing the standard maximizer, and the full
    // |value| distribution (keys are |30 * value|).
    const std::map<int, std::int64_t> expected_hist = {
        {0, 11124}, {5, 8520}, {10, 2208}, {15, 600}, {20, 48}};
    const std::string extremal_str = to_string(extremal_config());
    const bool extremal_in_argmax =
        std::any_of(cert.argmax.begin(), cert.argmax.end(),
                    [&](const Configuration& c) { return to_string(c) == extremal_str; });

    o.ok = cert.config_count == 22500 && cert.sup == Rational(2, 3) && extremal_in_argmax &&
           cert.argmax.size() == 48 && cert.histogram == expected_hist;
    o.cert = norm_certificate_json(cert);
    o.cert["extremal_in_argmax"] = extremal_in_argmax;
    o.cert["ok"] = o.ok;
    o.line = std::string("norm: ") + (o.ok ? "PASS" : "FAIL") +
             " sup=" + rational_to_string(cert.sup) +
             " types=" + std::to_string(cert.config_count) +
             " argmax=" + std::to_string(cert.argmax.size());
    return o;
}

// --------------------------------------------------------------- cocycle ---

Outcome run_cocycle(std::int64_t sample, std::uint64_t seed, int jobs,
                    const std::optional<Configuration>& corrupt) {
    Outcome o;
    CocycleScanOptions opts;
    opts.jobs = jobs;
    opts.corrupt_at = corrupt;
    const bool sampled = sample > 0;
    const CocycleReport rep = sampled ? verify_theta_cocycle_sampled(sample, seed, opts)
                                      : verify_theta_cocycle(opts);
    const std::int64_t want = sampled ? sample : configuration_count(6);
    o.ok = rep.ok() && rep.checked == want;
    o.cert = cocycle_report_json(rep, sampled,
                                 sampled ? std::optional<std::uint64_t>(seed) : std::nullopt);
    o.cert["ok"] = o.ok;
    o.line = std::string("cocycle: ") + (o.ok ? "PASS" : "FAIL") + " checked=" +
             std::to_string(rep.checked) + " failures=" + std::to_string(rep.failures) +
             (sampled ? " (sampled)" : " (full)");
    return o;
}

// ------------------------------------------------------------ class norm ---

Outcome run_class_norm(int trials, std::uint64_t seed) {
    Outcome o;
    try {
        const ClassNormCertificate cert = class_norm_certificate_theta(trials, seed);
        o.ok = cert.ok();
        o.cert = class_norm_certificate_json(cert);
        o.line = std::string("class-norm: ") + (o.ok ? "PASS" : "FAIL") +
                 " value=" + rational_to_string(cert.value) +
                 " trials=" + std::to_string(cert.trials_matching) + "/" +
                 std::to_string(cert.random_trials);
    } catch (const CertificateFailure& e) {
        o.ok = false;
        o.cert = ordered_json{{"kind", "class-norm"}, {"ok", false}, {"error", e.what()}};
        o.line = std::string("class-norm: FAIL ") + e.what();
    }
    return o;
}

// -------------------------------------------------------------- transfer ---

Outcome run_transfer(int trials, std::uint64_t seed) {
    Outcome o;
    bool ok = true;

    // transfer .. restriction must be the identity on every twisted basis
    // vector in degrees 3 and 4.
    int identity_ok3 = 0, identity_ok4 = 0;
    for (const int q : {3, 4}) {
        const std::size_t dim = basis(q, Mode::HTwisted).size();
        for (std::size_t i = 0; i < dim; ++i) {
            CochainVector e(q, Mode::HTwisted);
            e.coeff(i) = 1;
            if ((transfer_m(include_untwisted(e)) - e).is_zero())
                ++(q == 3 ? identity_ok3 : identity_ok4);
            else
                ok = false;
        }
    }

    // The central cochain is fixed; the single-factor orientation cochain
    // (already twisted-anti-invariant under one reflection) averages to 0.
    const bool theta_fixed =
        (transfer_m(include_untwisted(theta_vector())) - theta_vector()).is_zero();
    const CochainVector orient = project_function(2, Mode::GUntwisted, TypeFunction(or1));
    const bool orientation_killed = transfer_m(orient).is_zero();
    ok = ok && theta_fixed && orientation_killed;

    // Averaging never increases the sup norm.
    int norm_ok = 0;
    for (int k = 0; k < trials; ++k) {
        const int degree = (k % 2 == 0) ? 3 : 4;
        const CochainVector f =
            random_cochain(degree, Mode::GUntwisted, seed + static_cast<std::uint64_t>(k));
        if (transfer_m(f).sup_norm() <= f.sup_norm())
            ++norm_ok;
        else
            ok = false;
    }

    o.ok = ok;
    o.cert = ordered_json{{"kind", "transfer"},
                          {"identity_on_basis_deg3", identity_ok3},
                          {"identity_on_basis_deg4", identity_ok4},
                          {"central_cochain_fixed", theta_fixed},
                          {"orientation_cochain_killed", orientation_killed},
                          {"norm_trials", trials},
                          {"norm_trials_ok", norm_ok},
                          {"seed", seed},
                          {"ok", ok}};
    o.line = std::string("transfer: ") + (ok ? "PASS" : "FAIL") + " identity=" +
             std::to_string(identity_ok3) + "+" + std::to_string(identity_ok4) +
             " norm-trials=" + std::to_string(norm_ok) + "/" + std::to_string(trials);
    return o;
}

// ----------------------------------------------------------- decompose -----

Outcome run_decompose_suite(int count, std::uint64_t seed) {
    Outcome o;
    bool ok = true;

    int coboundary_ok = 0;
    for (int k = 0; k < count; ++k) {
        const CochainVector b =
            random_cochain(3, Mode::HTwisted, seed + static_cast<std::uint64_t>(k));
        const DecompositionReport rep = decompose(apply_delta(b));
        if (rep.final_ok())
            ++coboundary_ok;
        else
            ok = false;
    }

    // Every degree-4 twisted cocycle annihilated by the corner functional,
    // not just coboundaries: intersect the coboundary-operator kernel with
    // the functional's kernel and decompose each basis vector.
    const auto kernel = kernel_basis(delta_matrix(4, Mode::HTwisted));
    const auto row = lambda_functional_row(Mode::HTwisted);
    Matrix pairing_matrix(1, std::vector<Rational>(kernel.size(), Rational(0)));
    for (std::size_t j = 0; j < kernel.size(); ++j)
        for (std::size_t i = 0; i < row.size(); ++i)
            pairing_matrix[0][j] += row[i] * kernel[j][i];
    const auto combos = kernel_basis(pairing_matrix);

    int kernel_ok = 0;
    for (const auto& combo : combos) {
        CochainVector v(4, Mode::HTwisted);
        for (std::size_t j = 0; j < kernel.size(); ++j)
            for (std::size_t i = 0; i < kernel[j].size(); ++i)
                v.coeff(i) += combo[j] * kernel[j][i];
        const DecompositionReport rep = decompose(v);
        if (rep.final_ok() && !v.is_zero())
            ++kernel_ok;
        else
            ok = false;
    }
    if (combos.size() != 2) ok = false;  // certified dimension of that slice

    o.ok = ok;
    o.cert = ordered_json{{"kind", "decomposition-suite"},
                          {"coboundary_trials", count},
                          {"coboundary_ok", coboundary_ok},
                          {"kernel_slice_dim", combos.size()},
                          {"kernel_ok", kernel_ok},
                          {"seed", seed},
                          {"ok", ok}};
    o.line = std::string("decompose: ") + (ok ? "PASS" : "FAIL") + " coboundaries=" +
             std::to_string(coboundary_ok) + "/" + std::to_string(count) +
             " kernel=" + std::to_string(kernel_ok) + "/" + std::to_string(combos.size());
    return o;
}

// ------------------------------------------------------------- surface -----

SurfaceGroupData load_group(const std::string& generators_path) {
    if (generators_path.empty()) return octagon_group();
    return group_from_generators(parse_generator_lines(read_text_file(generators_path)));
}

Outcome run_surface_or(const std::string& generators_path) {
    Outcome o;
    const SurfaceGroupData g = load_group(generators_path);
    const GroupChain z = genus2_cycle(g);
    const auto summands = orientation_summands(z, g);
    const int value = pair_orientation(z, g);
    const Rational fn_value = pair_chain(TypeFunction(or1), z, g);

    o.ok = value == 4 && fn_value == 4;
    o.cert = ordered_json{{"kind", "surface-orientation-pairing"},
                          {"generator_source",
                           generators_path.empty() ? std::string("built-in") : generators_path},
                          {"relator_residual", g.relator_residual},
                          {"base_point", g.base_point},
                          {"summands", summands},
                          {"value", value},
                          {"value_via_cochain", rational_to_string(fn_value)},
                          {"ok", o.ok}};
    o.line = std::string("surface pair-or: ") + (o.ok ? "PASS" : "FAIL") +
             " value=" + std::to_string(value);
    return o;
}

Outcome run_surface_theta(const std::string& generators_path) {
    Outcome o;
    const SurfaceGroupData g = load_group(generators_path);
    const GroupChain z = genus2_cycle(g);
    const auto corners = claim_orientation_values(g);
    const GroupChain zz = product_chain(z, z);
    const Rational value =
        pair_chain([](const Configuration& c) { return theta(c); }, zz, g);

    // Independent route: the pairing must equal 16 times the corner
    // functional of the central cochain, computed from the five
    // distinguished degenerate types alone.
    const Rational functional = lambda_profile(theta_vector()).functional();
    const bool corners_ok =
        std::all_of(corners.begin(), corners.end(), [](int v) { return v == 1; });

    o.ok = value == 16 && value == 16 * functional && corners_ok;
    o.cert = ordered_json{{"kind", "surface-product-pairing"},
                          {"generator_source",
                           generators_path.empty() ? std::string("built-in") : generators_path},
                          {"relator_residual", g.relator_residual},
                          {"base_point", g.base_point},
                          {"terms", zz.size()},
                          {"corner_orientations", corners},
                          {"value", rational_to_string(value)},
                          {"functional", rational_to_string(functional)},
                          {"sixteen_times_functional", rational_to_string(16 * functional)},
                          {"ok", o.ok}};
    o.line = std::string("surface pair-theta: ") + (o.ok ? "PASS" : "FAIL") +
             " value=" + rational_to_string(value);
    return o;
}

Outcome run_surface_suite(const std::string& generators_path) {
    const Outcome a = run_surface_or(generators_path);
    const Outcome b = run_surface_theta(generators_path);
    Outcome o;
    o.ok = a.ok && b.ok;
    o.cert = ordered_json{
        {"kind", "surface-suite"}, {"orientation", a.cert}, {"product", b.cert}, {"ok", o.ok}};
    o.line = a.line + "\n" + b.line;
    return o;
}

// ---------------------------------------------------------- plain output ---

void cmd_cfg_print(const std::string& config_str, int& rc) {
    if (config_str.empty()) {
        std::cout << " t  arrangements  configurations\n";
        for (int t = 1; t <= kMaxTupleLength; ++t) {
            std::cout << " " << t << "  " << arrangement_types(t).size() << "  "
                      << configuration_count(t) << "\n";
        }
        return;
    }
    const Configuration c = parse_config(config_str);
    const auto [n1, n2] = counts(c);
    std::cout << "canonical: " << to_string(c) << "\n";
    std::cout << "points: " << c.length() << "  distinct: (" << n1 << "," << n2 << ")\n";
    const std::int64_t index = configuration_index(c);
    for (const Mode mode : {Mode::HTwisted, Mode::GUntwisted}) {
        const auto& table = orbit_table(static_cast<int>(c.length()), mode);
        const auto orbit = table.orbit_of[static_cast<std::size_t>(index)];
        const auto& oc = table.orbits[static_cast<std::size_t>(orbit)];
        std::cout << (mode == Mode::HTwisted ? "twisted" : "untwisted") << " orbit: size "
                  << oc.size << (oc.forced_zero ? ", forced zero" : ", free") << ", sign "
                  << static_cast<int>(table.sign_of[static_cast<std::size_t>(index)]) << "\n";
    }
    if (c.length() == 5) std::cout << "theta: " << rational_to_string(theta(c)) << "\n";
    (void)rc;
}

void cmd_theta_eval(const std::string& config_str, int& rc) {
    const Configuration c = parse_config(config_str);
    if (c.length() != 5)
        throw InputError("theta eval needs a 5-point configuration, got " +
                         std::to_string(c.length()) + " points");
    const Rational reduced = theta(c);
    const Rational full = theta_full(c);
    std::cout << "theta(" << to_string(c) << ") = " << rational_to_string(reduced) << "\n";
    if (reduced != full) {
        std::cout << "route mismatch: full alternation gives " << rational_to_string(full)
                  << "\n";
        rc = 1;
    }
}

void cmd_decompose(const std::string& input_path, const std::string& output_path, int& rc) {
    const CochainVector f = cochain_from_json(read_text_file(input_path));
    try {
        const DecompositionReport rep = decompose(f);
        emit_json(decomposition_report_json(rep), output_path);
        if (!rep.final_ok()) rc = 1;
    } catch (const NotACocycle& e) {
        throw InputError(e.what());
    } catch (const PreconditionLambda& e) {
        throw InputError(e.what());
    }
}

void cmd_invariants(int g, int h, const std::string& out, int& rc) {
    if (g < 0 || h < 0) throw InputError("genus values must be nonnegative");
    const InvariantsReport rep = invariants_report(g, h);
    emit_json(invariants_report_json(rep), out);
    if (!rep.consistent()) rc = 1;
}

void finish(const Outcome& o, const std::string& out, int& rc) {
    std::cout << o.line << "\n";
    if (!out.empty()) emit_json(o.cert, out);
    if (!o.ok) rc = std::max(rc, 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for cochains on circle-pair configurations"};
    app.require_subcommand(1);
    int rc = 0;

    // ----- cfg
    auto* cfg = app.add_subcommand("cfg", "configuration-type utilities");
    cfg->require_subcommand(1);
    auto* cfg_print = cfg->add_subcommand("print", "type tables, or one type's data");
    std::string cfg_config;
    cfg_print->add_option("--config", cfg_config, "configuration string X=[...];Y=[...]");
    cfg_print->callback([&] { cmd_cfg_print(cfg_config, rc); });

    // ----- theta
    auto* th = app.add_subcommand("theta", "the central degree-4 cochain");
    th->require_subcommand(1);

    auto* th_eval = th->add_subcommand("eval", "evaluate at one 5-point type");
    std::string th_eval_config;
    th_eval->add_option("--config", th_eval_config, "configuration string")->required();
    th_eval->callback([&] { cmd_theta_eval(th_eval_config, rc); });

    auto* th_norm = th->add_subcommand("norm", "exhaustive sup-norm certificate");
    std::string th_norm_out, th_norm_corrupt;
    th_norm->add_option("--out", th_norm_out, "write the JSON certificate here");
    th_norm->add_option("--corrupt-theta", th_norm_corrupt)->group("");
    th_norm->callback(
        [&] { finish(run_norm(parse_fault_target(th_norm_corrupt)), th_norm_out, rc); });

    // ----- verify
    auto* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);

    auto* v_cocycle = verify->add_subcommand("cocycle", "coboundary-vanishing scan");
    std::int64_t v_sample = 0;
    std::uint64_t v_seed = 1;
    int v_jobs = 1;
    std::string v_out, v_corrupt;
    v_cocycle->add_option("--sample", v_sample, "check N uniformly sampled 6-point types")
        ->check(CLI::PositiveNumber);
    v_cocycle->add_option("--seed", v_seed, "sampling seed (default 1)");
    v_cocycle->add_option("--jobs", v_jobs, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    v_cocycle->add_option("--out", v_out, "write the JSON certificate here");
    v_cocycle->add_option("--corrupt-theta", v_corrupt)->group("");
    v_cocycle->callback([&] {
        finish(run_cocycle(v_sample, v_seed, v_jobs, parse_fault_target(v_corrupt)), v_out, rc);
    });

    auto* v_class = verify->add_subcommand("class-norm", "class-norm certificate");
    int v_class_trials = 100;
    std::uint64_t v_class_seed = 7;
    std::string v_class_out;
    v_class->add_option("--trials", v_class_trials, "random coboundary trials (default 100)")
        ->check(CLI::PositiveNumber);
    v_class->add_option("--seed", v_class_seed, "trial seed (default 7)");
    v_class->add_option("--out", v_class_out, "write the JSON certificate here");
    v_class->callback([&] { finish(run_class_norm(v_class_trials, v_class_seed), v_class_out, rc); });

    auto* v_transfer = verify->add_subcommand("transfer", "averaging-transfer checks");
    int v_tr_count = 50;
    std::uint64_t v_tr_seed = 5;
    std::string v_tr_out;
    v_transfer->add_option("--count", v_tr_count, "random norm trials (default 50)")
        ->check(CLI::PositiveNumber);
    v_transfer->add_option("--seed", v_tr_seed, "trial seed (default 5)");
    v_transfer->add_option("--out", v_tr_out, "write the JSON certificate here");
    v_transfer->callback([&] { finish(run_transfer(v_tr_count, v_tr_seed), v_tr_out, rc); });

    // ----- decompose
    auto* dec = app.add_subcommand("decompose", "find an explicit coboundary primitive");
    std::string dec_input, dec_output;
    dec->add_option("--input", dec_input, "degree-4 twisted cochain JSON")->required();
    dec->add_option("--output", dec_output, "write the report here (default: stdout)");
    dec->callback([&] { cmd_decompose(dec_input, dec_output, rc); });

    // ----- surface
    auto* surf = app.add_subcommand("surface", "genus-2 boundary pairings");
    surf->require_subcommand(1);
    std::string surf_gen_or, surf_gen_theta;

    auto* s_or = surf->add_subcommand("pair-or", "pair the orientation cochain with the cycle");
    s_or->add_option("--generators", surf_gen_or, "file with four 2x2 matrices (16 reals)");
    s_or->callback([&] { finish(run_surface_or(surf_gen_or), "", rc); });

    auto* s_th = surf->add_subcommand("pair-theta",
                                      "pair the central cochain with the product cycle");
    s_th->add_option("--generators", surf_gen_theta, "file with four 2x2 matrices (16 reals)");
    s_th->callback([&] { finish(run_surface_theta(surf_gen_theta), "", rc); });

    // ----- invariants
    auto* inv = app.add_subcommand("invariants", "closed-formula calculator for genus pairs");
    std::vector<int> inv_genus;
    std::string inv_out;
    inv->add_option("--genus", inv_genus, "the two genus values")->expected(2)->required();
    inv->add_option("--out", inv_out, "also write the JSON report here");
    inv->callback([&] { cmd_invariants(inv_genus[0], inv_genus[1], inv_out, rc); });

    // ----- suite
    auto* suite = app.add_subcommand("suite", "run one named suite, or all of them");
    std::string suite_name;
    std::int64_t suite_sample = 0;
    std::optional<std::uint64_t> suite_seed;
    std::optional<int> suite_count;
    int suite_jobs = 1;
    std::string suite_out, suite_corrupt, suite_generators;
    suite
        ->add_option("name", suite_name,
                     "norm | cocycle | class-norm | transfer | decompose | surface | all")
        ->required()
        ->check(CLI::IsMember(
            {"norm", "cocycle", "class-norm", "transfer", "decompose", "surface", "all"}));
    suite->add_option("--sample", suite_sample, "sampled (not exhaustive) 6-point scan")
        ->check(CLI::PositiveNumber);
    suite->add_option("--seed", suite_seed, "override every suite seed");
    suite->add_option("--count", suite_count, "override every suite trial count");
    suite->add_option("--jobs", suite_jobs, "worker threads for the 6-point scan")
        ->check(CLI::PositiveNumber);
    suite->add_option("--out", suite_out, "write the combined JSON certificate here");
    suite->add_option("--generators", suite_generators, "generator file for surface suites");
    suite->add_option("--corrupt-theta", suite_corrupt)->group("");
    suite->callback([&] {
        const auto corrupt = parse_fault_target(suite_corrupt);
        std::vector<std::pair<std::string, Outcome>> results;
        const bool all = suite_name == "all";
        if (all || suite_name == "norm") results.emplace_back("norm", run_norm(corrupt));
        if (all || suite_name == "cocycle")
            results.emplace_back("cocycle", run_cocycle(suite_sample, suite_seed.value_or(1),
                                                        suite_jobs, corrupt));
        if (all || suite_name == "class-norm")
            results.emplace_back("class-norm", run_class_norm(suite_count.value_or(100),
                                                              suite_seed.value_or(7)));
        if (all || suite_name == "transfer")
            results.emplace_back("transfer",
                                 run_transfer(suite_count.value_or(50), suite_seed.value_or(5)));
        if (all || suite_name == "decompose")
            results.emplace_back("decompose", run_decompose_suite(suite_count.value_or(100),
                                                                  suite_seed.value_or(7)));
        if (all || suite_name == "surface")
            results.emplace_back("surface", run_surface_suite(suite_generators));

        bool all_ok = true;
        ordered_json combined;
        combined["kind"] = "suite";
        for (const auto& [name, o] : results) {
            std::cout << o.line << "\n";
            combined[name] = o.cert;
            all_ok = all_ok && o.ok;
        }
        combined["ok"] = all_ok;
        if (!suite_out.empty()) emit_json(combined, suite_out);
        if (!all_ok) rc = std::max(rc, 1);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MalformedRanks& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConstructionFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

#include "ffr/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffr/convolution.hpp"
#include "ffr/gegenbauer.hpp"
#include "ffr/pinching.hpp"
#include "ffr/poly_io.hpp"
#include "ffr/polynomial.hpp"
#include "ffr/rational.hpp"
#include "ffr/roots.hpp"
#include "ffr/transforms.hpp"
#include "ffr/verification.hpp"

namespace ffr {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// --p and --q accept either a polynomial JSON file or an inline root list.
ExactPolynomial resolve_poly(const std::string& value, const std::string& flag) {
    if (value.empty()) throw UsageError(flag + ": empty polynomial argument");
    std::ifstream in(value);
    if (in.good()) {
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_polynomial_json(buf.str(), value);
    }
    try {
        return parse_root_list(value);
    } catch (const std::exception&) {
        throw UsageError(flag + ": '" + value +
                         "' is neither a readable file nor a root list");
    }
}

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
    std::optional<Rational> r = parse_rational(text);
    if (!r) {
        try {
            std::size_t pos = 0;
            const double v = std::stod(text, &pos);
            if (pos == text.size() && std::isfinite(v)) r = rational_from_double(v);
        } catch (const std::exception&) {
        }
    }
    if (!r) throw UsageError(flag + ": could not parse '" + text + "'");
    return *r;
}

Rational parse_positive_flag(const std::string& text, const std::string& flag) {
    const Rational r = parse_rational_flag(text, flag);
    if (sgn(r) <= 0) throw UsageError(flag + " must be positive");
    return r;
}

void emit_text(std::string text, const std::string& path) {
    if (text.empty() || text.back() != '\n') text += '\n';
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError(path + ": cannot open for writing");
    out << text;
}

ordered_json coeffs_json(const ExactPolynomial& p) {
    ordered_json arr = ordered_json::array();
    for (const Rational& c : p.coeffs) arr.push_back(format_rational(c));
    if (arr.empty()) arr.push_back("0");
    return arr;
}

RootIsolationConfig isolation_config(const CliConfig& cfg) {
    if (!(cfg.tol > 0)) throw UsageError("--tol must be positive");
    RootIsolationConfig rc;
    rc.abs_tol = cfg.tol;
    return rc;
}

void require_json_format(const CliConfig& cfg) {
    if (cfg.format != "json")
        throw UsageError("--format: only json is available for this subcommand");
}

int do_convolve(const CliConfig& cfg) {
    require_json_format(cfg);
    const ExactPolynomial p = resolve_poly(cfg.p_arg, "--p");
    const ExactPolynomial q = resolve_poly(cfg.q_arg, "--q");
    const ExactPolynomial conv = rect_convolve(p, q, {cfg.d, cfg.k});
    emit_text(polynomial_to_json(conv), cfg.out_path);
    return 0;
}

int do_theta(const CliConfig& cfg) {
    require_json_format(cfg);
    const ExactPolynomial p = resolve_poly(cfg.p_arg, "--p");
    const Rational alpha = parse_positive_flag(cfg.alpha_text, "--alpha");
    const ThetaReport rep = theta(p, cfg.n, alpha, isolation_config(cfg));
    ordered_json j;
    j["schema"] = 1;
    j["op"] = "theta";
    j["n"] = cfg.n;
    j["d"] = rep.d;
    j["alpha"] = cfg.alpha_text;
    j["theta"] = rep.theta;
    j["maxroot_w"] = rep.maxroot_w;
    emit_text(j.dump(2), cfg.report_path);
    return 0;
}

int do_phi(const CliConfig& cfg) {
    require_json_format(cfg);
    const ExactPolynomial p = resolve_poly(cfg.p_arg, "--p");
    const ExactPolynomial q = resolve_poly(cfg.q_arg, "--q");
    const Rational alpha = parse_positive_flag(cfg.alpha_text, "--alpha");
    const double value = phi(p, q, cfg.n, cfg.k, cfg.d, alpha, isolation_config(cfg));
    ordered_json j;
    j["schema"] = 1;
    j["op"] = "phi";
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["d"] = cfg.d;
    j["alpha"] = cfg.alpha_text;
    j["phi"] = value;
    j["unverified_regime"] = cfg.k != cfg.n;
    j["potential_equality_case"] = std::abs(value) < kNearEqualityTol;
    emit_text(j.dump(2), cfg.report_path);
    return 0;
}

int do_gegenbauer(const CliConfig& cfg, bool has_eval, bool has_cauchy) {
    require_json_format(cfg);
    const Rational alpha = parse_positive_flag(cfg.alpha_text, "--alpha");
    const int modes = int(has_eval) + int(has_cauchy) + int(cfg.want_maxroot);
    if (modes != 1)
        throw UsageError("gegenbauer: choose exactly one of --eval, --maxroot, --cauchy");
    ordered_json j;
    j["schema"] = 1;
    j["op"] = "gegenbauer";
    j["d"] = cfg.d;
    j["alpha"] = cfg.alpha_text;
    if (cfg.want_maxroot) {
        j["mode"] = "maxroot";
        j["maxroot"] = geg_maxroot(cfg.d, alpha, isolation_config(cfg));
    } else if (has_eval) {
        const Rational x = parse_rational_flag(cfg.x_text, "--eval");
        const Rational value = evaluate(geg_coeffs(cfg.d, alpha), x);
        j["mode"] = "eval";
        j["x"] = cfg.x_text;
        j["value"] = to_double(value);
        j["value_exact"] = format_rational(value);
    } else {
        if (cfg.d < 1) throw UsageError("--cauchy requires d >= 1");
        const Rational x = parse_rational_flag(cfg.x_text, "--cauchy");
        j["mode"] = "cauchy";
        j["x"] = cfg.x_text;
        j["cauchy"] = geg_cauchy_ratio(cfg.d, to_double(alpha), to_double(x));
    }
    emit_text(j.dump(2), cfg.report_path);
    return 0;
}

int do_pinch(const CliConfig& cfg) {
    require_json_format(cfg);
    const ExactPolynomial p = resolve_poly(cfg.p_arg, "--p");
    const Rational alpha = parse_positive_flag(cfg.alpha_text, "--alpha");
    const PinchDecomposition dec = quad_pinch(p, cfg.n, alpha, isolation_config(cfg));
    ordered_json j;
    j["schema"] = 1;
    j["op"] = "pinch";
    j["n"] = cfg.n;
    j["alpha"] = cfg.alpha_text;
    j["a"] = format_rational(dec.a);
    j["b"] = format_rational(dec.b);
    j["mu"] = format_rational(dec.mu);
    j["kappa"] = format_rational(dec.kappa);
    j["rho"] = format_rational(dec.rho);
    j["t"] = format_rational(dec.t);
    j["p_tilde"] = ordered_json{{"coeffs", coeffs_json(dec.p_tilde)}};
    j["p_hat"] = ordered_json{{"coeffs", coeffs_json(dec.p_hat)}};
    j["roots_exact"] = dec.roots_exact;
    emit_text(j.dump(2), cfg.report_path);
    return 0;
}

int do_verify(const CliConfig& cfg) {
    require_json_format(cfg);
    TrialSpec spec = default_trial_spec(cfg.claim);
    spec.seed = cfg.seed;
    if (cfg.trials >= 1) spec.trials = cfg.trials;
    if (cfg.d_max >= 1) spec.d_max = cfg.d_max;
    if (cfg.n_max >= 0) spec.n_max = cfg.n_max;
    if (cfg.alpha_lo >= 0) spec.alpha_lo = cfg.alpha_lo;
    if (cfg.alpha_hi > 0) spec.alpha_hi = cfg.alpha_hi;
    if (!cfg.root_max_text.empty())
        spec.root_max = parse_positive_flag(cfg.root_max_text, "--root-max");
    if (cfg.margin >= 0) spec.margin = cfg.margin;

    const VerificationReport report = run_claim(cfg.claim, spec);

    ordered_json j;
    j["schema"] = 1;
    j["op"] = "verify";
    j["claim"] = report.claim;
    j["seed"] = spec.seed;
    ordered_json sj;
    sj["trials"] = spec.trials;
    sj["d_max"] = spec.d_max;
    sj["n_max"] = spec.n_max;
    sj["alpha_lo"] = spec.alpha_lo;
    sj["alpha_hi"] = spec.alpha_hi;
    sj["root_max"] = format_rational(spec.root_max);
    sj["margin"] = spec.margin;
    j["spec"] = sj;
    j["trials"] = report.trials;
    j["passes"] = report.passes;
    j["failures"] = report.failures;
    j["near_equalities"] = report.near_equalities;
    j["min_margin"] = report.min_margin;
    j["worst_case"] = report.worst_case;
    emit_text(j.dump(2), cfg.report_path);
    std::fprintf(stderr, "runtime_ms %.3f\n", report.runtime_ms);
    return report.failures == 0 ? 0 : 1;
}

int do_sweep(const CliConfig& cfg) {
    std::ostringstream csv;
    if (cfg.sweep_op == "gegenbauer") {
        if (cfg.d_lo < 1 || cfg.d_hi < cfg.d_lo)
            throw UsageError("sweep: empty d range (need 1 <= d-lo <= d-hi)");
        const Rational theta_r = parse_rational_flag(cfg.theta_text, "--theta");
        if (sgn(theta_r) < 0) throw UsageError("--theta must be nonnegative");
        const Rational x = cfg.x_text.empty()
                               ? Rational(3)
                               : parse_rational_flag(cfg.x_text, "--x");
        const double theta_f = to_double(theta_r);
        const double x_f = to_double(x);
        csv << "# columns: d,theta,maxroot,gamma_theta,cauchy_at_x,bound_at_x\n";
        for (int d = cfg.d_lo; d <= cfg.d_hi; ++d) {
            const Rational alpha = 1 + theta_r * d;
            csv << d << "," << fmt17(theta_f) << ","
                << fmt17(geg_maxroot(d, alpha)) << "," << fmt17(gamma_theta(theta_f))
                << "," << fmt17(geg_cauchy_ratio(d, to_double(alpha), x_f)) << ","
                << fmt17(asymptotic_cauchy(theta_f, x_f)) << "\n";
        }
    } else if (cfg.sweep_op == "phi" || cfg.sweep_op == "theta") {
        if (cfg.steps < 1 || !(cfg.alpha_lo > 0) || cfg.alpha_hi < cfg.alpha_lo)
            throw UsageError("sweep: empty alpha range (need 0 < alpha-lo <= alpha-hi, "
                             "steps >= 1)");
        const ExactPolynomial p = resolve_poly(cfg.p_arg, "--p");
        ExactPolynomial q;
        if (cfg.sweep_op == "phi") q = resolve_poly(cfg.q_arg, "--q");
        csv << (cfg.sweep_op == "phi" ? "# columns: alpha,phi\n"
                                      : "# columns: alpha,theta,maxroot_w\n");
        for (int i = 0; i < cfg.steps; ++i) {
            const double alpha =
                cfg.steps == 1
                    ? cfg.alpha_lo
                    : cfg.alpha_lo + (cfg.alpha_hi - cfg.alpha_lo) * i / (cfg.steps - 1);
            const Rational alpha_r = rational_from_double(alpha);
            if (cfg.sweep_op == "phi") {
                const double value = phi(p, q, cfg.n, cfg.k, cfg.d, alpha_r);
                csv << fmt17(alpha) << "," << fmt17(value) << "\n";
            } else {
                const ThetaReport rep = theta(p, cfg.n, alpha_r);
                csv << fmt17(alpha) << "," << fmt17(rep.theta) << ","
                    << fmt17(rep.maxroot_w) << "\n";
            }
        }
    } else {
        throw UsageError("sweep: unknown --op '" + cfg.sweep_op +
                         "' (expected gegenbauer, phi, or theta)");
    }
    emit_text(csv.str(), cfg.out_path);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CliConfig cfg;
    CLI::App app{"rectangular additive convolution toolkit"};
    app.require_subcommand(1);

    CLI::App* conv = app.add_subcommand("convolve", "rectangular additive convolution");
    conv->add_option("--d", cfg.d, "ambient degree")->required();
    conv->add_option("--k", cfg.k, "rectangularity parameter");
    conv->add_option("--p", cfg.p_arg, "polynomial JSON file or inline root list")
        ->required();
    conv->add_option("--q", cfg.q_arg, "polynomial JSON file or inline root list")
        ->required();
    conv->add_option("--out", cfg.out_path, "output file (default stdout)");
    conv->add_option("--format", cfg.format, "output format (json)");

    CLI::App* th = app.add_subcommand("theta", "theta functional of a polynomial");
    th->add_option("--n", cfg.n, "dimension gap")->required();
    th->add_option("--alpha", cfg.alpha_text, "scale parameter, rational or decimal")
        ->required();
    th->add_option("--p", cfg.p_arg, "polynomial JSON file or inline root list");
    th->add_option("--roots", cfg.p_arg, "inline root list (alias for --p)");
    th->add_option("--tol", cfg.tol, "root isolation tolerance");
    th->add_option("--report", cfg.report_path, "report file (default stdout)");
    th->add_option("--format", cfg.format, "output format (json)");

    CLI::App* ph = app.add_subcommand("phi", "finite free excess over two polynomials");
    ph->add_option("--n", cfg.n, "dimension gap")->required();
    ph->add_option("--k", cfg.k, "convolution rectangularity")->required();
    ph->add_option("--d", cfg.d, "ambient degree")->required();
    ph->add_option("--alpha", cfg.alpha_text, "scale parameter")->required();
    ph->add_option("--p", cfg.p_arg, "polynomial JSON file or inline root list")
        ->required();
    ph->add_option("--q", cfg.q_arg, "polynomial JSON file or inline root list")
        ->required();
    ph->add_option("--tol", cfg.tol, "root isolation tolerance");
    ph->add_option("--report", cfg.report_path, "report file (default stdout)");
    ph->add_option("--format", cfg.format, "output format (json)");

    CLI::App* geg = app.add_subcommand("gegenbauer", "Gegenbauer polynomial queries");
    geg->add_option("--d", cfg.d, "degree")->required();
    geg->add_option("--alpha", cfg.alpha_text, "family parameter")->required();
    CLI::Option* eval_opt = geg->add_option("--eval", cfg.x_text, "evaluate at x");
    geg->add_flag("--maxroot", cfg.want_maxroot, "largest root");
    CLI::Option* cauchy_opt =
        geg->add_option("--cauchy", cfg.x_text, "Cauchy transform at x");
    geg->add_option("--tol", cfg.tol, "root isolation tolerance");
    geg->add_option("--report", cfg.report_path, "report file (default stdout)");
    geg->add_option("--format", cfg.format, "output format (json)");

    CLI::App* pn = app.add_subcommand("pinch", "pinch decomposition at the W maxroot");
    pn->add_option("--n", cfg.n, "dimension gap")->required();
    pn->add_option("--alpha", cfg.alpha_text, "scale parameter")->required();
    pn->add_option("--p", cfg.p_arg, "polynomial JSON file or inline root list");
    pn->add_option("--roots", cfg.p_arg, "inline root list (alias for --p)");
    pn->add_option("--tol", cfg.tol, "root isolation tolerance");
    pn->add_option("--report", cfg.report_path, "report file (default stdout)");
    pn->add_option("--format", cfg.format, "output format (json)");

    CLI::App* ver = app.add_subcommand("verify", "randomized and grid certification");
    ver->add_option("--claim", cfg.claim,
                    "main|rr|deriv|claimt|geg0|quasilinear|pinch|gegenbauer|"
                    "basictheta|translate|hmonotone|monotu|simplify|asymptotics")
        ->required();
    ver->add_option("--trials", cfg.trials, "trial count (default per claim)");
    ver->add_option("--seed", cfg.seed, "RNG seed");
    ver->add_option("--d-max", cfg.d_max, "maximum sampled degree");
    ver->add_option("--n-max", cfg.n_max, "maximum sampled dimension gap");
    ver->add_option("--alpha-lo", cfg.alpha_lo, "alpha range lower end (exclusive)");
    ver->add_option("--alpha-hi", cfg.alpha_hi, "alpha range upper end (inclusive)");
    ver->add_option("--root-max", cfg.root_max_text, "root lattice upper bound");
    ver->add_option("--margin", cfg.margin, "strict inequality noise floor");
    ver->add_option("--report", cfg.report_path, "report file (default stdout)");
    ver->add_option("--format", cfg.format, "output format (json)");

    CLI::App* sw = app.add_subcommand("sweep", "CSV sweeps over flag ranges");
    sw->add_option("--op", cfg.sweep_op, "gegenbauer|phi|theta")->required();
    sw->add_option("--d-lo", cfg.d_lo, "degree range start");
    sw->add_option("--d-hi", cfg.d_hi, "degree range end");
    sw->add_option("--theta", cfg.theta_text, "coupling ratio for gegenbauer sweeps");
    sw->add_option("--x", cfg.x_text, "evaluation point");
    sw->add_option("--alpha-lo", cfg.alpha_lo, "alpha grid start");
    sw->add_option("--alpha-hi", cfg.alpha_hi, "alpha grid end");
    sw->add_option("--steps", cfg.steps, "alpha grid size");
    sw->add_option("--n", cfg.n, "dimension gap");
    CLI::Option* sw_k_opt =
        sw->add_option("--k", cfg.k, "convolution rectangularity (default n)");
    sw->add_option("--d", cfg.d, "ambient degree for phi sweeps");
    sw->add_option("--p", cfg.p_arg, "polynomial JSON file or inline root list");
    sw->add_option("--q", cfg.q_arg, "polynomial JSON file or inline root list");
    sw->add_option("--out", cfg.out_path, "output file (default stdout)");
    sw->add_option("--format", cfg.format, "output format (csv)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ffr");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (conv->parsed()) {
            cfg.subcommand = "convolve";
            return do_convolve(cfg);
        }
        if (th->parsed()) {
            cfg.subcommand = "theta";
            if (cfg.p_arg.empty()) throw UsageError("theta: --p or --roots is required");
            return do_theta(cfg);
        }
        if (ph->parsed()) {
            cfg.subcommand = "phi";
            return do_phi(cfg);
        }
        if (geg->parsed()) {
            cfg.subcommand = "gegenbauer";
            return do_gegenbauer(cfg, eval_opt->count() > 0, cauchy_opt->count() > 0);
        }
        if (pn->parsed()) {
            cfg.subcommand = "pinch";
            if (cfg.p_arg.empty()) throw UsageError("pinch: --p or --roots is required");
            return do_pinch(cfg);
        }
        if (ver->parsed()) {
            cfg.subcommand = "verify";
            return do_verify(cfg);
        }
        if (sw->parsed()) {
            cfg.subcommand = "sweep";
            if (cfg.format != "csv" && cfg.format != "json")
                throw UsageError("--format: expected csv");
            if (sw_k_opt->count() == 0) cfg.k = cfg.n;
            return do_sweep(cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace ffr

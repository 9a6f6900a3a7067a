#pragma once

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracfield/fracfield.hpp"

namespace fracfield::cli {

namespace detail_cli {

inline std::vector<double> parse_double_list(const std::string& s, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::domain_error(std::string("cannot parse ") + what + " value '" + tok + "'");
        }
    }
    if (out.empty()) throw std::domain_error(std::string("empty ") + what + " list");
    return out;
}

inline std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    for (double v : parse_double_list(s, what)) {
        const int i = static_cast<int>(v);
        if (static_cast<double>(i) != v)
            throw std::domain_error(std::string(what) + " entries must be integers");
        out.push_back(i);
    }
    return out;
}

inline std::array<double, 4> broadcast4(const std::vector<double>& v, const char* what) {
    if (v.size() == 1) return {v[0], v[0], v[0], v[0]};
    if (v.size() == 4) return {v[0], v[1], v[2], v[3]};
    throw std::domain_error(std::string(what) + " needs 1 or 4 comma-separated values");
}

inline std::string json_to_flag_string(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) return fracfield::detail::fmt(v.get<double>());
    if (v.is_array()) {
        std::string out;
        for (const auto& e : v) {
            if (!out.empty()) out += ',';
            out += json_to_flag_string(e);
        }
        return out;
    }
    throw std::runtime_error("config values must be numbers, strings, or arrays");
}

// Every flag is bound to a string; a JSON config supplies values for
// flags not given on the command line, so `--config file.json` plus
// overrides equals the merged flag set.
struct OptionBag {
    std::vector<std::pair<CLI::Option*, std::string*>> bound;
    std::string config_path;

    void add(CLI::App* cmd, const std::string& flag, std::string& target,
             const std::string& desc) {
        bound.emplace_back(cmd->add_option(flag, target, desc), &target);
    }

    void attach_config(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON file with defaults for any flag");
    }

    void apply_config() {
        if (config_path.empty()) return;
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error(config_path + ": cannot open for reading");
        ordered_json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(config_path + ": " + e.what());
        }
        for (auto& [opt, target] : bound) {
            if (opt->count() > 0) continue;
            const std::string key = opt->get_lnames().front();
            if (doc.contains(key)) *target = json_to_flag_string(doc.at(key));
        }
    }
};

struct Output {
    std::string path; // empty means stdout

    template <class WriteFn>
    void write(WriteFn&& fn) const {
        if (path.empty()) {
            fn(std::cout);
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error(path + ": cannot open for writing");
        fn(out);
    }
};

struct GeometryFlags {
    std::string grid;  // per-axis sample counts
    std::string a = "0,0,0,0";
    std::string b = "1,1,1,1";
    std::string alpha = "0.5";
    std::string beta;  // defaults to alpha

    void add_to(CLI::App* cmd, OptionBag& bag, const std::string& default_grid) {
        grid = default_grid;
        bag.add(cmd, "--grid", grid, "axis sample counts n0,n1,n2,n3");
        bag.add(cmd, "--a", a, "lower terminals a0,a1,a2,a3");
        bag.add(cmd, "--b", b, "upper terminals b0,b1,b2,b3");
        bag.add(cmd, "--alpha", alpha, "left orders (one value or per-axis list)");
        bag.add(cmd, "--beta", beta, "right orders (defaults to --alpha)");
    }

    Grid make_grid() const {
        const auto n = parse_int_list(grid, "--grid");
        if (n.size() != 4) throw std::domain_error("--grid needs 4 comma-separated counts");
        const auto av = broadcast4(parse_double_list(a, "--a"), "--a");
        const auto bv = broadcast4(parse_double_list(b, "--b"), "--b");
        return Grid::box({n[0], n[1], n[2], n[3]}, av, bv);
    }

    FracScheme make_scheme(const Grid& g) const {
        FracScheme s;
        s.alpha = broadcast4(parse_double_list(alpha, "--alpha"), "--alpha");
        s.beta = beta.empty() ? s.alpha
                              : broadcast4(parse_double_list(beta, "--beta"), "--beta");
        s.a = g.a;
        s.b = g.b;
        s.validate();
        return s;
    }
};

inline double parse_scalar(const std::string& s, const char* what) {
    const auto v = parse_double_list(s, what);
    if (v.size() != 1) throw std::domain_error(std::string(what) + " takes a single value");
    return v[0];
}

inline std::uint64_t parse_seed(const std::string& s) {
    try {
        return static_cast<std::uint64_t>(std::stoull(s));
    } catch (const std::exception&) {
        throw std::domain_error("cannot parse --seed value '" + s + "'");
    }
}

inline FourPotential random_potential(const Grid& g, Rng& rng) {
    FourPotential A(g);
    for (auto& c : A.comp) fill_random(c, rng);
    return A;
}

inline VectorField3 random_vector_field(const Grid& g, Rng& rng) {
    VectorField3 v(g);
    for (auto& c : v.comp) fill_random(c, rng);
    return v;
}

inline CurrentDensity random_current(const Grid& g, Rng& rng) {
    CurrentDensity j(g);
    fill_random(j.rho, rng);
    fill_random(j.j_x, rng);
    fill_random(j.j_y, rng);
    fill_random(j.j_z, rng);
    return j;
}

} // namespace detail_cli

// ---------------------------------------------------------------------------
// check suites
// ---------------------------------------------------------------------------

namespace detail_cli {

struct SuiteResult {
    ordered_json norms; // the six canonical keys; null when not computed
    bool pass = true;
    double scale = 1.0;

    SuiteResult() {
        norms["gauss"] = nullptr;
        norms["ampere"] = nullptr;
        norms["no_monopole"] = nullptr;
        norms["faraday"] = nullptr;
        norms["bianchi"] = nullptr;
        norms["continuity"] = nullptr;
    }

    void set(const char* key, double value, double tol) {
        norms[key] = value;
        if (!(value <= tol * scale)) pass = false;
    }
};

// Gauge suite: every reported norm is the max-abs change of that residual
// under a random gauge transformation; all must vanish to tolerance.
inline SuiteResult suite_gauge(const Grid& g, const FracScheme& s, double c,
                               std::uint64_t seed, double tol) {
    Rng rng(seed);
    const FourPotential A = random_potential(g, rng);
    const ScalarField phi = random_field(g, rng);
    const FourPotential A2 = gauge_transform(A, phi, s);
    const FieldTensor F = field_strength_lr(A, s);
    const FieldTensor F2 = field_strength_lr(A2, s);
    CurrentDensity j(g);

    SuiteResult r;
    r.scale = F.max_abs() + 1.0;
    const MaxwellResidual m1 = evaluate_maxwell(F, j, s, c);
    const MaxwellResidual m2 = evaluate_maxwell(F2, j, s, c);
    r.set("gauss", max_abs_diff(m1.gauss, m2.gauss), tol);
    r.set("ampere", max_abs_diff(m1.ampere, m2.ampere), tol);
    r.set("no_monopole", max_abs_diff(m1.no_monopole, m2.no_monopole), tol);
    r.set("faraday", max_abs_diff(m1.faraday, m2.faraday), tol);
    r.set("bianchi", std::fabs(bianchi_residual(F2, s) - bianchi_residual(F, s)), tol);
    if (!(max_abs_diff(F, F2) <= tol * r.scale)) r.pass = false;
    return r;
}

// Bianchi suite: cyclic identity and the source-free pair for several
// seeded potentials.
inline SuiteResult suite_bianchi(const Grid& g, const FracScheme& s, std::uint64_t seed,
                                 double tol) {
    SuiteResult r;
    Rng rng(seed);
    double bianchi = 0.0, no_monopole = 0.0, faraday = 0.0, scale = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const FourPotential A = random_potential(g, rng);
        const FieldTensor F = field_strength_lr(A, s);
        scale = std::max(scale, F.max_abs());
        bianchi = std::max(bianchi, bianchi_residual(F, s));
        const FirstPairResidual fp = first_pair_residual(F, s);
        no_monopole = std::max(no_monopole, fp.no_monopole.max_abs());
        faraday = std::max(faraday, fp.faraday.max_abs());
    }
    r.scale = scale + 1.0;
    r.set("bianchi", bianchi, tol);
    r.set("no_monopole", no_monopole, tol);
    r.set("faraday", faraday, tol);
    return r;
}

// Vector-identity suite: div(curl) and curl(grad) for the left-right,
// left, and right families. div(curl) is the no-monopole residual of a
// curl-built field; curl(grad) is the faraday residual of a static
// gradient field.
inline SuiteResult suite_vector_identities(const Grid& g, const FracScheme& s,
                                           std::uint64_t seed, double tol) {
    Rng rng(seed);
    const VectorField3 F = random_vector_field(g, rng);
    const ScalarField phi = random_field(g, rng);

    double div_curl = div_lr(curl_lr(F, s), s).max_abs();
    double curl_grad = curl_lr(grad_lr(phi, s), s).max_abs();
    const double a1 = s.alpha[1], b1 = s.beta[1];
    div_curl = std::max(div_curl, div_left(curl_left(F, a1), a1).max_abs());
    div_curl = std::max(div_curl, div_right(curl_right(F, b1), b1).max_abs());
    curl_grad = std::max(curl_grad, curl_left(grad_left(phi, a1), a1).max_abs());
    curl_grad = std::max(curl_grad, curl_right(grad_right(phi, b1), b1).max_abs());

    SuiteResult r;
    r.scale = std::max(F.max_abs(), phi.max_abs()) + 1.0;
    r.set("no_monopole", div_curl, tol);
    r.set("faraday", curl_grad, tol);
    return r;
}

// Continuity suite: sources constructed from a potential-derived tensor
// through the sourced pair conserve charge identically.
inline SuiteResult suite_continuity(const Grid& g, FracScheme s, double c,
                                    std::uint64_t seed, double tol) {
    s.alpha[0] = s.beta[0] = 1.0; // causal time axis
    for (int i = 1; i < 4; ++i)
        if (s.alpha[i] != s.beta[i])
            throw std::domain_error("continuity suite requires equal spatial orders");
    Rng rng(seed);
    const FourPotential A = random_potential(g, rng);
    const FieldTensor F = field_strength_lr(A, s);
    const FracScheme sw = s.swapped();

    VectorField3 E(g), B(g);
    E.comp = F.E;
    B.comp = F.B;
    ScalarField rho = div_lr(E, sw);
    rho *= 1.0 / (4.0 * M_PI);
    VectorField3 j = curl_lr(B, sw);
    for (int i = 0; i < 3; ++i) j[i] -= partial_lr(E[i], 0, sw);
    j *= c / (4.0 * M_PI);

    SuiteResult r;
    r.scale = std::max(rho.max_abs(), j.max_abs()) + 1.0;
    r.set("continuity", continuity_residual(rho, j, s, c).max_abs(), tol);
    return r;
}

// Euler-Lagrange suite: the variational residual equals the sourced pair
// up to the 1/(4 pi c) factor.
inline SuiteResult suite_el(const Grid& g, const FracScheme& s, double c,
                            std::uint64_t seed, double tol) {
    Rng rng(seed);
    const FourPotential A = random_potential(g, rng);
    const CurrentDensity j = random_current(g, rng);
    const ActionConfig cfg = ActionConfig::make(g, s, c);
    const FourPotential el = el_residual(A, j, cfg);
    const FieldTensor F = field_strength_lr(A, s);
    const SecondPairResidual sp = second_pair_residual(F, j, s, c);

    const double k = 4.0 * M_PI * c;
    double gauss = max_abs_diff(k * el.comp[0], sp.gauss);
    double ampere = 0.0;
    for (int i = 0; i < 3; ++i)
        ampere = std::max(ampere, max_abs_diff(k * el.comp[1 + i], sp.ampere[i]));

    SuiteResult r;
    r.scale = F.max_abs() + 1.0;
    r.set("gauss", gauss, tol);
    r.set("ampere", ampere, tol);
    return r;
}

// Asymmetric suite: the one-sided theory. Source-free pair and cyclic
// identity vanish for a right-tensor potential; the sourced pair must be
// invariant under the right-derivative gauge transformation.
inline SuiteResult suite_asymmetric(const Grid& g, const FracScheme& s, double c,
                                    std::uint64_t seed, double tol) {
    for (int mu = 1; mu < 4; ++mu)
        if (s.alpha[mu] != s.alpha[0])
            throw std::domain_error("asymmetric suite uses a single order; pass one --alpha");
    const double alpha = s.alpha[0];
    Rng rng(seed);
    const FourPotential A = random_potential(g, rng);
    const ScalarField phi = random_field(g, rng);
    const FieldTensor F = field_strength_right(A, alpha);
    const FieldTensor F2 = field_strength_right(gauge_transform_right(A, phi, alpha), alpha);
    CurrentDensity j(g);

    SuiteResult r;
    r.scale = F.max_abs() + 1.0;
    const FirstPairResidual fp = asym_first_pair_residual(F, alpha, c);
    r.set("no_monopole", fp.no_monopole.max_abs(), tol);
    r.set("faraday", fp.faraday.max_abs(), tol);
    r.set("bianchi", bianchi_residual_right(F, alpha), tol);

    const SecondPairResidual s1 = asym_second_pair_residual(F, j, alpha, c);
    const SecondPairResidual s2 = asym_second_pair_residual(F2, j, alpha, c);
    r.set("gauss", max_abs_diff(s1.gauss, s2.gauss), tol);
    r.set("ampere", max_abs_diff(s1.ampere, s2.ampere), tol);
    if (!(max_abs_diff(F, F2) <= tol * r.scale)) r.pass = false;
    return r;
}

} // namespace detail_cli

// ---------------------------------------------------------------------------
// subcommand drivers
// ---------------------------------------------------------------------------

namespace detail_cli {

struct CheckArgs {
    std::string suite;
    GeometryFlags geom;
    std::string c = "1";
    std::string seed = "1";
    std::string tol = "1e-12";
    Output out;
};

inline std::string default_grid_for(const std::string& suite) {
    if (suite == "vector-identities") return "2,16,16,16";
    if (suite == "continuity" || suite == "el") return "6,6,6,6";
    return "8,8,8,8";
}

inline int run_check(const CheckArgs& args) {
    GeometryFlags geom = args.geom;
    if (geom.grid.empty()) geom.grid = default_grid_for(args.suite);
    const Grid g = geom.make_grid();
    const FracScheme s = geom.make_scheme(g);
    const double c = parse_scalar(args.c, "--c");
    const double tol = parse_scalar(args.tol, "--tol");
    const std::uint64_t seed = parse_seed(args.seed);
    if (!(c > 0.0)) throw std::domain_error("--c must be positive");

    SuiteResult r;
    if (args.suite == "gauge") r = suite_gauge(g, s, c, seed, tol);
    else if (args.suite == "bianchi") r = suite_bianchi(g, s, seed, tol);
    else if (args.suite == "vector-identities") r = suite_vector_identities(g, s, seed, tol);
    else if (args.suite == "continuity") r = suite_continuity(g, s, c, seed, tol);
    else if (args.suite == "el") r = suite_el(g, s, c, seed, tol);
    else if (args.suite == "asymmetric") r = suite_asymmetric(g, s, c, seed, tol);
    else
        throw std::domain_error("unknown suite '" + args.suite +
                                "' (expected gauge, bianchi, vector-identities, "
                                "continuity, el, or asymmetric)");

    ordered_json report;
    report["suite"] = args.suite;
    report["scheme"] = scheme_to_json(s);
    report["grid"] = grid_to_json(g);
    report["residual_norms"] = r.norms;
    report["pass"] = r.pass;
    report["tolerance"] = tol;
    args.out.write([&](std::ostream& os) { os << report.dump(2) << '\n'; });
    return r.pass ? 0 : 1;
}

struct DerivArgs {
    std::string input;
    std::string op = "lr";
    std::string alpha = "0.5";
    std::string beta;
    Output out;
};

inline int run_deriv(const DerivArgs& args) {
    if (args.input.empty()) throw std::domain_error("deriv needs --input");
    const SampledLine f = read_sampled_line_csv(args.input);
    const double alpha = parse_scalar(args.alpha, "--alpha");
    const double beta = args.beta.empty() ? alpha : parse_scalar(args.beta, "--beta");

    SampledLine d;
    if (args.op == "left") d = left_rl_deriv(f, alpha);
    else if (args.op == "right") d = right_rl_deriv(f, beta);
    else if (args.op == "lr") d = lr_op(f, alpha, beta);
    else throw std::domain_error("unknown --op '" + args.op + "' (expected left, right, lr)");

    args.out.write([&](std::ostream& os) { write_sampled_line_csv(os, d); });
    return 0;
}

struct WaveArgs {
    std::string alpha = "1";
    std::string modes = "1";
    std::string L;
    std::string c = "1";
    std::string t_end = "1";
    std::string dt_out = "0.1";
    std::string init;
    Output out;
};

inline int run_wave(const WaveArgs& args) {
    if (args.init.empty()) throw std::domain_error("wave needs --init u0.csv,v0.csv");
    std::string u_path = args.init, v_path;
    if (const auto comma = args.init.find(','); comma != std::string::npos) {
        u_path = args.init.substr(0, comma);
        v_path = args.init.substr(comma + 1);
    } else {
        throw std::domain_error("--init takes two files: u0.csv,v0.csv");
    }
    const SampledLine u0 = read_sampled_line_csv(u_path);
    const SampledLine v0 = read_sampled_line_csv(v_path);

    WaveConfig cfg;
    cfg.alpha = parse_scalar(args.alpha, "--alpha");
    cfg.c = parse_scalar(args.c, "--c");
    const int modes = static_cast<int>(parse_scalar(args.modes, "--modes"));
    cfg.n_modes = modes;
    cfg.L = args.L.empty() ? static_cast<double>(u0.size()) * u0.h
                           : parse_scalar(args.L, "--L");
    const double t_end = parse_scalar(args.t_end, "--t-end");
    const double dt = parse_scalar(args.dt_out, "--dt-out");
    if (!(dt > 0.0) || t_end < 0.0)
        throw std::domain_error("--t-end must be nonnegative and --dt-out positive");
    const long count = std::lround(std::floor(t_end / dt + 1e-9));
    for (long i = 0; i <= count; ++i) cfg.t_samples.push_back(i * dt);

    const WaveSeries series = solve_wave(u0, v0, cfg);
    args.out.write([&](std::ostream& os) { write_wave_series_csv(os, series); });
    return 0;
}

struct DispersionArgs {
    std::string alpha = "1";
    std::string kmax = "4";
    std::string c = "1";
    std::string L; // empty: 2 pi, so k is the integer mode index
    Output out;
};

inline int run_dispersion(const DispersionArgs& args) {
    const auto alphas = parse_double_list(args.alpha, "--alpha");
    const int kmax = static_cast<int>(parse_scalar(args.kmax, "--kmax"));
    const double c = parse_scalar(args.c, "--c");
    const double L = args.L.empty() ? 2.0 * M_PI : parse_scalar(args.L, "--L");
    if (kmax < 0) throw std::domain_error("--kmax must be nonnegative");
    if (!(L > 0.0)) throw std::domain_error("--L must be positive");

    std::vector<DispersionRow> rows;
    for (double alpha : alphas)
        for (int n = 0; n <= kmax; ++n) {
            const double k = 2.0 * M_PI * n / L;
            rows.push_back({k, alpha, dispersion(k, alpha, c)});
        }
    args.out.write([&](std::ostream& os) { write_dispersion_csv(os, rows); });
    return 0;
}

struct GateauxArgs {
    GeometryFlags geom;
    std::string c = "1";
    std::string seed = "1";
    std::string eps = "1e-2,1e-3,1e-4";
    std::string tol = "1e-10";
    Output out;
};

inline int run_gateaux(const GateauxArgs& args) {
    GeometryFlags geom = args.geom;
    if (geom.grid.empty()) geom.grid = "6,6,6,6";
    const Grid g = geom.make_grid();
    const FracScheme s = geom.make_scheme(g);
    const double c = parse_scalar(args.c, "--c");
    const double tol = parse_scalar(args.tol, "--tol");
    Rng rng(parse_seed(args.seed));

    const FourPotential A = random_potential(g, rng);
    const CurrentDensity j = random_current(g, rng);
    const ActionConfig cfg = ActionConfig::make(g, s, c);
    VariationProbe probe;
    probe.eta = random_potential(g, rng);
    for (auto& comp : probe.eta.comp) zero_boundary_layer(comp);
    probe.epsilons = parse_double_list(args.eps, "--eps");

    const GateauxReport rep = gateaux_check(A, j, cfg, probe, tol);

    ordered_json report;
    report["epsilons"] = rep.epsilons;
    report["gaps"] = rep.gaps;
    report["inner_product"] = rep.inner_product;
    report["pass"] = rep.pass;
    args.out.write([&](std::ostream& os) { os << report.dump(2) << '\n'; });
    return rep.pass ? 0 : 1;
}

} // namespace detail_cli

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name. Exit codes: 0 success/pass, 1 suite failure, 2 usage or
/// configuration error.
inline int run(const std::vector<std::string>& args) {
    using namespace detail_cli;

    CLI::App app{"fracfield: fractional electromagnetic field toolkit"};
    app.require_subcommand(1);
    OptionBag bag;

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "run a residual check suite");
    bag.add(check_cmd, "--suite", check.suite,
            "gauge | bianchi | vector-identities | continuity | el | asymmetric");
    check.geom.add_to(check_cmd, bag, "");
    bag.add(check_cmd, "--c", check.c, "wave speed");
    bag.add(check_cmd, "--seed", check.seed, "seed for the random fields");
    bag.add(check_cmd, "--tol", check.tol, "pass tolerance (scaled by max |F| + 1)");
    bag.add(check_cmd, "--out", check.out.path, "write the JSON report here (default stdout)");

    DerivArgs deriv;
    auto* deriv_cmd = app.add_subcommand("deriv", "apply a fractional derivative to a CSV line");
    bag.add(deriv_cmd, "--input", deriv.input, "input CSV with columns x,value");
    bag.add(deriv_cmd, "--op", deriv.op, "left | right | lr");
    bag.add(deriv_cmd, "--alpha", deriv.alpha, "left order");
    bag.add(deriv_cmd, "--beta", deriv.beta, "right order (defaults to --alpha)");
    bag.add(deriv_cmd, "--out", deriv.out.path, "output CSV path (default stdout)");

    WaveArgs wave;
    auto* wave_cmd = app.add_subcommand("wave", "evolve the 1+1-D fractional wave equation");
    bag.add(wave_cmd, "--alpha", wave.alpha, "spatial order");
    bag.add(wave_cmd, "--modes", wave.modes, "Fourier truncation");
    bag.add(wave_cmd, "--L", wave.L, "spatial period (default: sample count times spacing)");
    bag.add(wave_cmd, "--c", wave.c, "wave speed");
    bag.add(wave_cmd, "--t-end", wave.t_end, "final output time");
    bag.add(wave_cmd, "--dt-out", wave.dt_out, "output time step");
    bag.add(wave_cmd, "--init", wave.init, "initial data: u0.csv,v0.csv");
    bag.add(wave_cmd, "--out", wave.out.path, "long-format CSV t,x,u (default stdout)");

    DispersionArgs disp;
    auto* disp_cmd = app.add_subcommand("dispersion", "tabulate the plane-wave dispersion relation");
    bag.add(disp_cmd, "--alpha", disp.alpha, "order (single value or comma list)");
    bag.add(disp_cmd, "--kmax", disp.kmax, "largest integer mode index");
    bag.add(disp_cmd, "--c", disp.c, "wave speed");
    bag.add(disp_cmd, "--L", disp.L, "spatial period (default 2 pi)");
    bag.add(disp_cmd, "--out", disp.out.path, "CSV k,alpha,omega (default stdout)");

    GateauxArgs gateaux;
    auto* gateaux_cmd = app.add_subcommand("gateaux", "variational check of the field equations");
    gateaux.geom.add_to(gateaux_cmd, bag, "");
    bag.add(gateaux_cmd, "--c", gateaux.c, "wave speed");
    bag.add(gateaux_cmd, "--seed", gateaux.seed, "seed for potential, sources, and probe");
    bag.add(gateaux_cmd, "--eps", gateaux.eps, "step-size ladder");
    bag.add(gateaux_cmd, "--tol", gateaux.tol, "gap tolerance");
    bag.add(gateaux_cmd, "--out", gateaux.out.path, "JSON report path (default stdout)");

    for (auto* cmd : {check_cmd, deriv_cmd, wave_cmd, disp_cmd, gateaux_cmd})
        bag.attach_config(cmd);

    std::vector<const char*> argv;
    argv.push_back("fracfield");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        bag.apply_config();
        if (check_cmd->parsed()) return run_check(check);
        if (deriv_cmd->parsed()) return run_deriv(deriv);
        if (wave_cmd->parsed()) return run_wave(wave);
        if (disp_cmd->parsed()) return run_dispersion(disp);
        if (gateaux_cmd->parsed()) return run_gateaux(gateaux);
    } catch (const std::exception& e) {
        std::cerr << "fracfield: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

} // namespace fracfield::cli

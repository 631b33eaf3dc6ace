// Command-line front end: reproduces the stationary two-mode squeezing
// spectrum of the trapped-atom / two-mode-cavity source from a flat config
// file, and emits plot-ready CSV/JSON data.

#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cavsq/analysis.hpp"
#include "cavsq/coherent.hpp"
#include "cavsq/config.hpp"
#include "cavsq/errors.hpp"
#include "cavsq/params.hpp"
#include "cavsq/qle.hpp"
#include "cavsq/scattering.hpp"

namespace {

using namespace cavsq;
using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw ConfigError(fmt::format("cannot write to '{}'", path));
    return file;
}

void print_warnings(const RunConfig& cfg) {
    for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << "\n";
}

SpectrumTrace compute_trace(const RunConfig& cfg, const DerivedCouplings& dc) {
    const LinearNoiseModel model = build_model(dc, cfg.params);

    SpectrumTrace trace;
    trace.regime = classify_regime(dc.theta_big, cfg.params.kappa1);
    trace.omega_grid.resize(cfg.points);
    for (int i = 0; i < cfg.points; ++i) {
        const double frac = (cfg.points == 1)
                                ? 0.0
                                : static_cast<double>(i) / (cfg.points - 1);
        trace.omega_grid[i] =
            (cfg.omega_min + frac * (cfg.omega_max - cfg.omega_min)) *
            dc.theta_big;
    }
    const SpectrumSamples samples = spectrum_sweep(model, trace.omega_grid);
    trace.s_full_plus = samples.s_plus;
    trace.s_full_minus = samples.s_minus;
    trace.s_analytic.reserve(cfg.points);
    trace.s_flat.reserve(cfg.points);
    for (const double w : trace.omega_grid) {
        trace.s_analytic.push_back(
            s_analytic(w, dc.theta_big, dc.sigma_big, cfg.params.kappa1));
        trace.s_flat.push_back(s_flat(w, dc.theta_big, dc.sigma_big));
    }
    trace.minima = extract_minima(trace.omega_grid, trace.s_full_minus);
    return trace;
}

void write_spectrum(std::ostream& out, const SpectrumTrace& trace,
                    const DerivedCouplings& dc, OutputFormat format) {
    const bool merged = trace.regime.regime == Regime::Merged;
    if (format == OutputFormat::Csv) {
        out << "omega_rad_s,omega_over_theta,s_full_plus,s_full_minus,s_analytic";
        if (merged) out << ",s_flat";
        out << "\n";
        for (size_t i = 0; i < trace.omega_grid.size(); ++i) {
            out << fmt::format("{:.12e},{:.12e},{:.12e},{:.12e},{:.12e}",
                               trace.omega_grid[i],
                               trace.omega_grid[i] / dc.theta_big,
                               trace.s_full_plus[i], trace.s_full_minus[i],
                               trace.s_analytic[i]);
            if (merged) out << fmt::format(",{:.12e}", trace.s_flat[i]);
            out << "\n";
        }
        return;
    }
    json j;
    j["omega_rad_s"] = trace.omega_grid;
    json rel = json::array();
    for (const double w : trace.omega_grid) rel.push_back(w / dc.theta_big);
    j["omega_over_theta"] = rel;
    j["s_full_plus"] = trace.s_full_plus;
    j["s_full_minus"] = trace.s_full_minus;
    j["s_analytic"] = trace.s_analytic;
    if (merged) j["s_flat"] = trace.s_flat;
    j["regime"] = to_string(trace.regime.regime);
    out << j.dump(2) << "\n";
}

int run_spectrum(const RunConfig& cfg) {
    print_warnings(cfg);
    const DerivedCouplings dc = derive_couplings(
        cfg.params, cfg.refine_nu_prime ? NuPrimeMode::FixedPoint
                                        : NuPrimeMode::ClosedForm);
    const SpectrumTrace trace = compute_trace(cfg, dc);
    std::ofstream file;
    write_spectrum(open_output(cfg.output_path, file), trace, dc, cfg.format);
    return 0;
}

int run_report(const RunConfig& cfg) {
    const DerivedCouplings dc = derive_couplings(
        cfg.params, cfg.refine_nu_prime ? NuPrimeMode::FixedPoint
                                        : NuPrimeMode::ClosedForm);
    const SystemParams& p = cfg.params;
    const RegimeInfo regime = classify_regime(dc.theta_big, p.kappa1);
    const double gamma_b = motional_decoherence_rate(p, cfg.alpha);

    auto hz = [](double angular) { return angular / kTwoPi; };
    auto line = [](const std::string& name, const std::string& value) {
        std::cout << fmt::format("  {:<28} {}\n", name, value);
    };
    auto freq = [&](const std::string& name, double v) {
        line(name, fmt::format("{:.6g} Hz (x 2pi)", hz(v)));
    };

    std::cout << "derived couplings\n";
    freq("nu_prime", dc.nu_prime);
    freq("nu_prime - nu", dc.nu_prime - p.nu);
    line("chi1", fmt::format("{:.6g} {:+.6g}i Hz (x 2pi), |chi1| = {:.6g} Hz",
                             hz(dc.chi1.real()), hz(dc.chi1.imag()),
                             hz(std::abs(dc.chi1))));
    line("chi2", fmt::format("{:.6g} {:+.6g}i Hz (x 2pi), |chi2| = {:.6g} Hz",
                             hz(dc.chi2.real()), hz(dc.chi2.imag()),
                             hz(std::abs(dc.chi2))));
    freq("theta", dc.theta_big);
    freq("sigma", dc.sigma_big);
    line("s_center (sigma/theta)^4",
         fmt::format("{:.6g}", std::pow(dc.sigma_big / dc.theta_big, 4)));
    freq("kappa_1L", dc.rates.kappa_1l);
    freq("kappa_2L", dc.rates.kappa_2l);
    freq("kappa_1b", dc.rates.kappa_1b);
    freq("kappa_2b", dc.rates.kappa_2b);
    freq("delta_1L", dc.shifts.delta_1l);
    freq("delta_2L", dc.shifts.delta_2l);
    freq("delta_b", dc.shifts.delta_b);
    freq("delta_1 (resonance)", dc.delta_1);
    freq("delta_2 (resonance)", dc.delta_2);
    line("n_th (rate ratio)", fmt::format("{:.6g}", dc.n_th));
    line("n_th (|delta|/4nu')", fmt::format("{:.6g}", dc.n_th_approx));

    std::cout << "scattering diagnostics\n";
    freq("gamma_b", gamma_b);
    const auto sp = spontaneous_amplitudes(p, 0.0);
    line("t_sp_0", fmt::format("|t| = {:.6g} Hz (x 2pi)", hz(std::abs(sp.t0))));
    line("t_sp_+1", fmt::format("|t| = {:.6g} Hz (x 2pi)", hz(std::abs(sp.t_plus))));
    line("t_sp_-1", fmt::format("|t| = {:.6g} Hz (x 2pi)", hz(std::abs(sp.t_minus))));
    for (int j : {1, 2}) {
        const auto cav = cavity_amplitudes(p, j, dc.nu_prime);
        line(fmt::format("t_cav_{},+/-", j),
             fmt::format("|t+| = {:.6g}, |t-| = {:.6g} Hz (x 2pi)",
                         hz(std::abs(cav.t_plus)), hz(std::abs(cav.t_minus))));
        const double delta_j = (j == 1) ? dc.delta_1 : dc.delta_2;
        line(fmt::format("gamma_cav_sp_{} (m=1)", j),
             fmt::format("{:.6g} Hz (x 2pi)",
                         hz(cavity_spontaneous_loss(p, j, 1, delta_j))));
    }

    std::cout << "regime\n";
    line("theta/kappa", fmt::format("{:.6g}", dc.theta_big / p.kappa1));
    line("classification", to_string(regime.regime) +
                               (regime.weakly_resolved ? " (weakly resolved)"
                                                       : ""));
    if (cfg.warnings.empty()) {
        line("assumptions", "ok");
    } else {
        for (const auto& w : cfg.warnings) line("warning", w);
    }

    json j;
    j["nu_prime_hz"] = hz(dc.nu_prime);
    j["chi1_hz"] = {hz(dc.chi1.real()), hz(dc.chi1.imag())};
    j["chi2_hz"] = {hz(dc.chi2.real()), hz(dc.chi2.imag())};
    j["theta_hz"] = hz(dc.theta_big);
    j["sigma_hz"] = hz(dc.sigma_big);
    j["kappa_1l_hz"] = hz(dc.rates.kappa_1l);
    j["kappa_2l_hz"] = hz(dc.rates.kappa_2l);
    j["kappa_1b_hz"] = hz(dc.rates.kappa_1b);
    j["kappa_2b_hz"] = hz(dc.rates.kappa_2b);
    j["delta_1l_hz"] = hz(dc.shifts.delta_1l);
    j["delta_2l_hz"] = hz(dc.shifts.delta_2l);
    j["delta_b_hz"] = hz(dc.shifts.delta_b);
    j["delta_1_hz"] = hz(dc.delta_1);
    j["delta_2_hz"] = hz(dc.delta_2);
    j["n_th"] = dc.n_th;
    j["n_th_approx"] = dc.n_th_approx;
    j["gamma_b_hz"] = hz(gamma_b);
    j["regime"] = to_string(regime.regime);
    j["weakly_resolved"] = regime.weakly_resolved;
    j["warnings"] = cfg.warnings;
    std::cout << "machine-readable:\n" << j.dump(2) << "\n";
    return 0;
}

int run_coherent(const RunConfig& cfg, double t_max_periods, int steps) {
    print_warnings(cfg);
    const DerivedCouplings dc = derive_couplings(
        cfg.params, cfg.refine_nu_prime ? NuPrimeMode::FixedPoint
                                        : NuPrimeMode::ClosedForm);
    const double period = kTwoPi / dc.theta_big;

    std::ofstream file;
    std::ostream& out = open_output(cfg.output_path, file);
    out << "t_s,theta_t_over_pi,var_x1_minus_x2,var_p1_plus_p2,duan,"
           "cov_b_a1_abs,cov_b_a2_abs,n_b\n";
    const double r = 1.0 / std::sqrt(2.0);
    const Complex im(0, 1);
    Vector6cd x_rel, p_sum;
    x_rel << r, -r, 0, r, -r, 0;
    p_sum << -im * r, -im * r, 0, im * r, im * r, 0;
    for (int i = 0; i <= steps; ++i) {
        const double t = t_max_periods * period * i / steps;
        const GaussianState state =
            propagate_vacuum(evolution_map(dc.chi1, dc.chi2, t));
        out << fmt::format(
            "{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e}\n",
            t, dc.theta_big * t / std::numbers::pi,
            quadrature_variance(state, x_rel),
            quadrature_variance(state, p_sum), duan_combination(state),
            std::max(std::abs(state.cov(2, 0)), std::abs(state.cov(2, 3))),
            std::max(std::abs(state.cov(2, 1)), std::abs(state.cov(2, 4))),
            state.cov(5, 5).real() - 0.5);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-mode squeezing spectrum of a trapped atom in a driven cavity"};
    app.require_subcommand(1);

    std::string config_path, output_path, format_name = "csv", preset_name;
    double omega_min = -2.0, omega_max = 2.0;
    int points = 2001;
    bool refine = false;
    double t_max = 1.0;
    int steps = 200;

    auto add_common = [&](CLI::App* sub, bool config_required) {
        auto* opt = sub->add_option("--config", config_path,
                                    "flat key = value parameter file");
        if (config_required) opt->required();
        sub->add_option("--output", output_path, "output path (default stdout)");
        sub->add_option("--format", format_name, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--refine-nu-prime", refine,
                      "solve the trap-frequency shift self-consistently");
    };
    auto add_sweep = [&](CLI::App* sub) {
        sub->add_option("--omega-min", omega_min, "sweep start, units of theta");
        sub->add_option("--omega-max", omega_max, "sweep end, units of theta");
        sub->add_option("--points", points, "grid points")
            ->check(CLI::Range(2, 10000000));
    };

    auto* report = app.add_subcommand("report", "derived couplings and diagnostics");
    add_common(report, true);

    auto* spectrum = app.add_subcommand("spectrum", "stationary squeezing spectrum");
    add_common(spectrum, true);
    add_sweep(spectrum);

    auto* coherent = app.add_subcommand("coherent", "lossless covariance dynamics");
    add_common(coherent, true);
    coherent->add_option("--t-max", t_max, "duration, units of the period 2pi/theta");
    coherent->add_option("--steps", steps, "time steps")->check(CLI::Range(1, 10000000));

    auto* figure = app.add_subcommand("figure", "published-figure presets");
    figure->add_option("preset", preset_name, "fig2, fig3 or fig4")
        ->required()
        ->check(CLI::IsMember({"fig2", "fig3", "fig4"}));
    add_common(figure, false);
    add_sweep(figure);

    try {
        app.parse(argc, argv);

        RunConfig cfg;
        if (figure->parsed()) {
            cfg = preset_config(preset_name, config_path);
        } else {
            cfg = load_config(config_path);
        }
        if (omega_min >= omega_max)
            throw ConfigError("--omega-min must be below --omega-max");
        cfg.omega_min = omega_min;
        cfg.omega_max = omega_max;
        cfg.points = points;
        cfg.output_path = output_path;
        cfg.format = (format_name == "json") ? OutputFormat::Json
                                             : OutputFormat::Csv;
        cfg.refine_nu_prime = refine;

        if (report->parsed()) return run_report(cfg);
        if (coherent->parsed()) return run_coherent(cfg, t_max, steps);
        return run_spectrum(cfg);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const cavsq::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const cavsq::PhysicsError& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return 2;
    }
}

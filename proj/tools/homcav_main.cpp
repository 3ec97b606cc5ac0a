// homcav: coincidence-rate simulator for a Hong-Ou-Mandel interferometer
// with Fabry-Perot cavities in its arms. Emits CSV sweeps and JSON reports.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "homcav/homcav.hpp"

namespace {

using homcav::io::format_number;

struct ProfileOptions {
    double lambda_nm = 826.2;
    std::optional<double> pump_lambda_nm;
    double delta_lambda_nm = 8.0;
};

struct CavityOptions {
    std::optional<double> length_mm;
    std::optional<double> reflectance;
    std::optional<double> transmittance;
};

struct ToleranceOptions {
    double eps_weight = 1e-10;
    double eps_envelope = 1e-14;
};

void add_profile_options(CLI::App& app, ProfileOptions& opts) {
    app.add_option("--lambda_nm", opts.lambda_nm, "Central wavelength of the twin photons (nm)")
        ->capture_default_str();
    app.add_option("--pump_lambda_nm", opts.pump_lambda_nm,
                   "Pump wavelength (nm); defaults to lambda_nm/2");
    app.add_option("--delta_lambda_nm", opts.delta_lambda_nm, "Filter bandwidth (nm)")
        ->capture_default_str();
}

void add_cavity_options(CLI::App& app, const std::string& arm, CavityOptions& opts) {
    app.add_option("--" + arm + "_L_mm", opts.length_mm, arm + " cavity length (mm)");
    app.add_option("--" + arm + "_R", opts.reflectance, arm + " mirror reflectance");
    app.add_option("--" + arm + "_T", opts.transmittance,
                   arm + " mirror transmittance; defaults to 1 - R");
}

void add_tolerance_options(CLI::App& app, ToleranceOptions& opts) {
    app.add_option("--eps_weight", opts.eps_weight, "Reflection-series weight cutoff")
        ->capture_default_str();
    app.add_option("--eps_envelope", opts.eps_envelope, "Gaussian-envelope cutoff")
        ->capture_default_str();
}

void add_config_file(CLI::App& app, std::string& sink) {
    app.add_option("--config", sink, "Flat key=value configuration file; flags override it");
}

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

// Turns the key=value lines of a config file into long flags, skipping keys
// that already appear on the command line so that flags win.
std::vector<std::string> load_config_args(const std::string& path,
                                          const std::vector<std::string>& given) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::vector<std::string> extra;
    std::string line;
    while (std::getline(in, line)) {
        const std::string entry = trim(line);
        if (entry.empty() || entry.front() == '#') continue;
        const auto equals = entry.find('=');
        if (equals == std::string::npos)
            throw std::invalid_argument("malformed config line: " + entry);
        const std::string flag = "--" + trim(entry.substr(0, equals));
        const std::string value = trim(entry.substr(equals + 1));
        if (flag == "--" || value.empty())
            throw std::invalid_argument("malformed config line: " + entry);
        const bool overridden = std::any_of(given.begin(), given.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (!overridden) {
            extra.push_back(flag);
            extra.push_back(value);
        }
    }
    return extra;
}

std::vector<std::string> expand_config(std::vector<std::string> args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        std::size_t insert_at = 0;
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            insert_at = i + 2;
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            insert_at = i + 1;
        } else {
            continue;
        }
        const auto extra = load_config_args(path, args);
        args.insert(args.begin() + insert_at, extra.begin(), extra.end());
        break;
    }
    return args;
}

homcav::SpectralProfile make_profile(const ProfileOptions& opts) {
    const double lambda_m = opts.lambda_nm * 1e-9;
    const double pump_m = opts.pump_lambda_nm ? *opts.pump_lambda_nm * 1e-9 : 0.5 * lambda_m;
    return homcav::SpectralProfile(lambda_m, pump_m, opts.delta_lambda_nm * 1e-9);
}

std::optional<homcav::Cavity> make_cavity(const CavityOptions& opts, const std::string& arm) {
    if (!opts.length_mm && !opts.reflectance) return std::nullopt;
    if (!opts.length_mm || !opts.reflectance)
        throw std::invalid_argument(arm + " cavity needs both " + arm + "_L_mm and " + arm + "_R");
    const double r = *opts.reflectance;
    const double t = opts.transmittance ? *opts.transmittance : 1.0 - r;
    return homcav::Cavity(*opts.length_mm * 1e-3, r, t);
}

homcav::InterferometerConfig make_config(const ProfileOptions& profile, const CavityOptions& idler,
                                         const CavityOptions& signal) {
    return {make_cavity(idler, "idler"), make_cavity(signal, "signal"), make_profile(profile)};
}

homcav::SeriesTolerances make_tolerances(const ToleranceOptions& opts) {
    homcav::SeriesTolerances tol{opts.eps_weight, opts.eps_envelope};
    homcav::validate(tol);
    return tol;
}

void emit_report(const std::string& text, const std::optional<std::string>& output) {
    if (output) {
        std::ofstream out(*output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + *output);
        out << text;
    }
    std::cout << text;
}

std::string json_field(const std::string& key, const std::string& rendered) {
    return "\"" + key + "\": " + rendered;
}

std::string json_string(const std::string& value) { return "\"" + value + "\""; }

// ----------------------------------------------------------------------
// Subcommand state and execution

struct SweepArgs {
    ProfileOptions profile;
    CavityOptions idler, signal;
    ToleranceOptions tol;
    double delta_min_ps = -1.0;
    double delta_max_ps = 8.0;
    int samples = 1801;
    std::string output;
};

void run_sweep(const SweepArgs& args) {
    const auto config = make_config(args.profile, args.idler, args.signal);
    const auto curve = homcav::sweep(config, args.delta_min_ps * 1e-12, args.delta_max_ps * 1e-12,
                                     args.samples, make_tolerances(args.tol));
    homcav::io::write_curve_csv(args.output, curve);
    std::cout << "wrote " << args.output << " (" << curve.delays_s.size() << " samples)\n";
}

struct CavitySweepArgs {
    ProfileOptions profile;
    CavityOptions idler, signal;
    ToleranceOptions tol;
    double length_min_mm = 0.0;
    double length_max_mm = 0.0;
    int samples = 1201;
    double delta_ps = 0.66733;
    std::string output;
};

void run_cavity_sweep(const CavitySweepArgs& args) {
    if (!args.idler.reflectance) throw std::invalid_argument("cavity-sweep needs idler_R");
    if (!(args.length_min_mm < args.length_max_mm))
        throw std::invalid_argument("cavity-sweep needs length_min_mm < length_max_mm");
    if (args.samples < 2) throw std::invalid_argument("cavity-sweep needs at least 2 samples");

    const auto profile = make_profile(args.profile);
    const auto signal = make_cavity(args.signal, "signal");
    const auto tol = make_tolerances(args.tol);
    const double r = *args.idler.reflectance;
    const double t = args.idler.transmittance ? *args.idler.transmittance : 1.0 - r;
    const double delta_s = args.delta_ps * 1e-12;

    std::vector<double> lengths_mm(args.samples), rates(args.samples);
    const double step = (args.length_max_mm - args.length_min_mm) / (args.samples - 1);
    for (int i = 0; i < args.samples; ++i) {
        const double length_mm =
            i + 1 == args.samples ? args.length_max_mm : args.length_min_mm + i * step;
        lengths_mm[i] = length_mm;
        const homcav::Cavity idler(length_mm * 1e-3, r, t);
        if (signal) {
            const auto config = homcav::InterferometerConfig::with_both(idler, *signal, profile);
            rates[i] = homcav::rate_two_cavity(config, delta_s, tol);
        } else {
            rates[i] = homcav::rate_one_cavity(idler, profile, delta_s, tol);
        }
    }
    homcav::io::write_xy_csv(args.output, "cavity_length_mm", "rate", lengths_mm, rates);
    std::cout << "wrote " << args.output << " (" << args.samples << " samples)\n";
}

struct ReflectanceSweepArgs {
    ProfileOptions profile;
    ToleranceOptions tol;
    double length_mm = 0.4;
    double r_min = 0.1;
    double r_max = 0.9;
    int samples = 81;
    double delta_ps = 0.66733;
    std::string output;
};

void run_reflectance_sweep(const ReflectanceSweepArgs& args) {
    if (!(args.r_min >= 0.0 && args.r_min < args.r_max && args.r_max < 1.0))
        throw std::invalid_argument("reflectance-sweep needs 0 <= r_min < r_max < 1");
    if (args.samples < 2) throw std::invalid_argument("reflectance-sweep needs at least 2 samples");

    const auto profile = make_profile(args.profile);
    const auto tol = make_tolerances(args.tol);
    const double delta_s = args.delta_ps * 1e-12;

    std::vector<double> reflectances(args.samples), rates(args.samples);
    const double step = (args.r_max - args.r_min) / (args.samples - 1);
    for (int i = 0; i < args.samples; ++i) {
        const double r = i + 1 == args.samples ? args.r_max : args.r_min + i * step;
        reflectances[i] = r;
        rates[i] = homcav::rate_one_cavity(homcav::Cavity(args.length_mm * 1e-3, r), profile,
                                           delta_s, tol);
    }
    homcav::io::write_xy_csv(args.output, "reflectance", "rate", reflectances, rates);
    std::cout << "wrote " << args.output << " (" << args.samples << " samples)\n";
}

struct RegionsArgs {
    SweepArgs sweep;
    std::optional<double> flat_tol;
    std::optional<std::string> output;
};

void run_regions(const RegionsArgs& args) {
    const auto config = make_config(args.sweep.profile, args.sweep.idler, args.sweep.signal);
    const auto tol = make_tolerances(args.sweep.tol);
    const auto curve = homcav::sweep(config, args.sweep.delta_min_ps * 1e-12,
                                     args.sweep.delta_max_ps * 1e-12, args.sweep.samples, tol);
    const auto regions = homcav::detect_regions(curve, config, args.flat_tol, tol);

    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < regions.size(); ++i) {
        const auto& region = regions[i];
        out << "  {" << json_field("center_delay_ps", format_number(region.center_delay_s * 1e12))
            << ", "
            << json_field("closed_form_rate", region.closed_form_rate
                                                  ? format_number(*region.closed_form_rate)
                                                  : "null")
            << ", " << json_field("extremum_rate", format_number(region.extremum_rate)) << ", "
            << json_field("kind", json_string(homcav::to_string(region.kind))) << ", "
            << json_field("order", std::to_string(region.order)) << "}"
            << (i + 1 < regions.size() ? ",\n" : "\n");
    }
    out << "]\n";
    emit_report(out.str(), args.output);
}

struct PlatformArgs {
    ProfileOptions profile;
    CavityOptions idler, signal;
    ToleranceOptions tol;
    std::optional<double> delta_ps;
    std::optional<std::string> output;
};

void run_platform(const PlatformArgs& args) {
    if (!args.idler.reflectance) throw std::invalid_argument("platform needs idler_R");
    const double r = *args.idler.reflectance;
    const double t = args.idler.transmittance ? *args.idler.transmittance : 1.0 - r;
    const double platform = homcav::platform_one_cavity(homcav::Cavity(0.0, r, t));

    std::ostringstream out;
    out << "{" << json_field("platform", format_number(platform));
    if (args.delta_ps) {
        const auto config = make_config(args.profile, args.idler, args.signal);
        if (!config.idler_cavity)
            throw std::invalid_argument("platform with delta_ps needs idler_L_mm");
        const double rate =
            homcav::rate_two_cavity(config, *args.delta_ps * 1e-12, make_tolerances(args.tol));
        out << ", " << json_field("rate_at_delta", format_number(rate));
    }
    out << "}\n";
    emit_report(out.str(), args.output);
}

struct XorArgs {
    ProfileOptions profile;
    ToleranceOptions tol;
    int bit_idler = 0;
    int bit_signal = 0;
    double reflectance = 0.7;
    double resonant_L_mm = 0.404838;
    double anti_resonant_L_mm = 0.4050447;
    double halfwidth_ps = 4.2;
    int samples = 1201;
    double sym_threshold = 0.05;
    std::optional<std::string> output;
};

void run_xor(const XorArgs& args) {
    homcav::XorGateSetup setup{make_profile(args.profile),
                               args.reflectance,
                               args.resonant_L_mm * 1e-3,
                               args.anti_resonant_L_mm * 1e-3,
                               args.halfwidth_ps * 1e-12,
                               args.samples,
                               args.sym_threshold,
                               make_tolerances(args.tol)};
    const homcav::XorResult result = homcav::xor_gate(args.bit_idler, args.bit_signal, setup);

    std::ostringstream out;
    out << "{" << json_field("input_idler", std::to_string(result.input_idler)) << ", "
        << json_field("input_signal", std::to_string(result.input_signal)) << ", "
        << json_field("output", std::to_string(result.output)) << ", "
        << json_field("pattern", json_string(homcav::to_string(result.pattern))) << ", "
        << json_field("symmetry_score", format_number(result.symmetry_score)) << "}\n";
    emit_report(out.str(), args.output);
}

struct VerifyArgs {
    ProfileOptions profile;
    CavityOptions idler, signal;
    ToleranceOptions tol;
    double delta_min_ps = -2.0;
    double delta_max_ps = 8.0;
    int n_deltas = 50;
    double tolerance = 1e-6;
    int quad_points = 16384;
    double quad_halfwidth = 8.0;
    double inject_rel_error = 0.0;
    std::optional<std::string> output;
};

int run_verify(const VerifyArgs& args) {
    if (args.n_deltas < 2) throw std::invalid_argument("verify needs at least 2 delays");
    const auto config = make_config(args.profile, args.idler, args.signal);
    const auto tol = make_tolerances(args.tol);
    const homcav::QuadratureSpec quad{args.quad_points, args.quad_halfwidth};
    homcav::validate(quad);

    double max_rel_error = 0.0;
    double worst_delta_ps = args.delta_min_ps;
    double series_at_worst = 0.0;
    double spectral_at_worst = 0.0;
    bool converged = true;
    const double step = (args.delta_max_ps - args.delta_min_ps) / (args.n_deltas - 1);
    for (int i = 0; i < args.n_deltas; ++i) {
        const double delta_ps = args.delta_min_ps + i * step;
        const double series =
            homcav::rate_two_cavity(config, delta_ps * 1e-12, tol) * (1.0 + args.inject_rel_error);
        const homcav::SpectralRate spectral = homcav::rate_spectral(config, delta_ps * 1e-12, quad);
        converged = converged && spectral.converged;
        const double rel = std::fabs(spectral.value - series) / std::max(series, 1e-6);
        if (rel >= max_rel_error) {
            max_rel_error = rel;
            worst_delta_ps = delta_ps;
            series_at_worst = series;
            spectral_at_worst = spectral.value;
        }
    }
    const bool pass = converged && max_rel_error <= args.tolerance;

    std::ostringstream out;
    out << "{" << json_field("converged", converged ? "true" : "false") << ", "
        << json_field("max_rel_error", format_number(max_rel_error)) << ", "
        << json_field("n_deltas", std::to_string(args.n_deltas)) << ", "
        << json_field("pass", pass ? "true" : "false") << ", "
        << json_field("phase_convention", json_string(homcav::spectral_phase_convention())) << ", "
        << json_field("series_at_worst", format_number(series_at_worst)) << ", "
        << json_field("spectral_at_worst", format_number(spectral_at_worst)) << ", "
        << json_field("tolerance", format_number(args.tolerance)) << ", "
        << json_field("worst_delta_ps", format_number(worst_delta_ps)) << "}\n";
    emit_report(out.str(), args.output);

    if (!converged) throw std::runtime_error("spectral quadrature did not converge");
    if (!pass)
        throw std::runtime_error("oracle mismatch: max relative error " +
                                 format_number(max_rel_error) + " exceeds " +
                                 format_number(args.tolerance));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hong-Ou-Mandel interferometer with Fabry-Perot cavities"};
    app.require_subcommand(1);
    std::string config_path;

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Coincidence rate versus path delay (CSV)");
    add_config_file(*sweep_cmd, config_path);
    add_profile_options(*sweep_cmd, sweep_args.profile);
    add_cavity_options(*sweep_cmd, "idler", sweep_args.idler);
    add_cavity_options(*sweep_cmd, "signal", sweep_args.signal);
    add_tolerance_options(*sweep_cmd, sweep_args.tol);
    sweep_cmd->add_option("--delta_min_ps", sweep_args.delta_min_ps, "Start delay (ps)")
        ->capture_default_str();
    sweep_cmd->add_option("--delta_max_ps", sweep_args.delta_max_ps, "End delay (ps)")
        ->capture_default_str();
    sweep_cmd->add_option("--samples", sweep_args.samples, "Sample count")->capture_default_str();
    sweep_cmd->add_option("--output", sweep_args.output, "Output CSV path")->required();

    CavitySweepArgs cavity_args;
    auto* cavity_cmd =
        app.add_subcommand("cavity-sweep", "Rate versus idler cavity length at fixed delay (CSV)");
    add_config_file(*cavity_cmd, config_path);
    add_profile_options(*cavity_cmd, cavity_args.profile);
    add_cavity_options(*cavity_cmd, "idler", cavity_args.idler);
    add_cavity_options(*cavity_cmd, "signal", cavity_args.signal);
    add_tolerance_options(*cavity_cmd, cavity_args.tol);
    cavity_cmd->add_option("--length_min_mm", cavity_args.length_min_mm, "Start length (mm)")
        ->required();
    cavity_cmd->add_option("--length_max_mm", cavity_args.length_max_mm, "End length (mm)")
        ->required();
    cavity_cmd->add_option("--samples", cavity_args.samples, "Sample count")
        ->capture_default_str();
    cavity_cmd->add_option("--delta_ps", cavity_args.delta_ps, "Fixed delay (ps)")
        ->capture_default_str();
    cavity_cmd->add_option("--output", cavity_args.output, "Output CSV path")->required();

    ReflectanceSweepArgs refl_args;
    auto* refl_cmd = app.add_subcommand("reflectance-sweep",
                                        "Rate versus mirror reflectance at fixed delay (CSV)");
    add_config_file(*refl_cmd, config_path);
    add_profile_options(*refl_cmd, refl_args.profile);
    add_tolerance_options(*refl_cmd, refl_args.tol);
    refl_cmd->add_option("--idler_L_mm", refl_args.length_mm, "Cavity length (mm)")
        ->capture_default_str();
    refl_cmd->add_option("--r_min", refl_args.r_min, "Start reflectance")->capture_default_str();
    refl_cmd->add_option("--r_max", refl_args.r_max, "End reflectance")->capture_default_str();
    refl_cmd->add_option("--samples", refl_args.samples, "Sample count")->capture_default_str();
    refl_cmd->add_option("--delta_ps", refl_args.delta_ps, "Fixed delay (ps)")
        ->capture_default_str();
    refl_cmd->add_option("--output", refl_args.output, "Output CSV path")->required();

    RegionsArgs regions_args;
    auto* regions_cmd =
        app.add_subcommand("regions", "Detect interference regions of a sweep (JSON)");
    add_config_file(*regions_cmd, config_path);
    add_profile_options(*regions_cmd, regions_args.sweep.profile);
    add_cavity_options(*regions_cmd, "idler", regions_args.sweep.idler);
    add_cavity_options(*regions_cmd, "signal", regions_args.sweep.signal);
    add_tolerance_options(*regions_cmd, regions_args.sweep.tol);
    regions_cmd->add_option("--delta_min_ps", regions_args.sweep.delta_min_ps, "Start delay (ps)")
        ->capture_default_str();
    regions_cmd->add_option("--delta_max_ps", regions_args.sweep.delta_max_ps, "End delay (ps)")
        ->capture_default_str();
    regions_cmd->add_option("--samples", regions_args.sweep.samples, "Sample count")
        ->capture_default_str();
    regions_cmd->add_option("--flat_tol", regions_args.flat_tol,
                            "Flat classification band; defaults to 1e-3 * platform");
    regions_cmd->add_option("--output", regions_args.output, "Output JSON path");

    PlatformArgs platform_args;
    auto* platform_cmd =
        app.add_subcommand("platform", "One-cavity platform value T^2/(1-R^2) (JSON)");
    add_config_file(*platform_cmd, config_path);
    add_profile_options(*platform_cmd, platform_args.profile);
    add_cavity_options(*platform_cmd, "idler", platform_args.idler);
    add_cavity_options(*platform_cmd, "signal", platform_args.signal);
    add_tolerance_options(*platform_cmd, platform_args.tol);
    platform_cmd->add_option("--delta_ps", platform_args.delta_ps,
                             "Also report the series rate at this delay (ps)");
    platform_cmd->add_option("--output", platform_args.output, "Output JSON path");

    XorArgs xor_args;
    auto* xor_cmd = app.add_subcommand("xor", "Cavity-encoded XOR gate (JSON)");
    add_config_file(*xor_cmd, config_path);
    add_profile_options(*xor_cmd, xor_args.profile);
    add_tolerance_options(*xor_cmd, xor_args.tol);
    xor_cmd->add_option("--bit_idler", xor_args.bit_idler, "Idler input bit")->required();
    xor_cmd->add_option("--bit_signal", xor_args.bit_signal, "Signal input bit")->required();
    xor_cmd->add_option("--reflectance", xor_args.reflectance, "Mirror reflectance of both cavities")
        ->capture_default_str();
    xor_cmd->add_option("--resonant_L_mm", xor_args.resonant_L_mm, "Reference length for bit 0 (mm)")
        ->capture_default_str();
    xor_cmd
        ->add_option("--anti_resonant_L_mm", xor_args.anti_resonant_L_mm,
                     "Reference length for bit 1 (mm)")
        ->capture_default_str();
    xor_cmd->add_option("--halfwidth_ps", xor_args.halfwidth_ps, "Sweep half-width (ps)")
        ->capture_default_str();
    xor_cmd->add_option("--samples", xor_args.samples, "Sweep samples (odd)")
        ->capture_default_str();
    xor_cmd->add_option("--sym_threshold", xor_args.sym_threshold, "SY/NS decision threshold")
        ->capture_default_str();
    xor_cmd->add_option("--output", xor_args.output, "Output JSON path");

    VerifyArgs verify_args;
    auto* verify_cmd =
        app.add_subcommand("verify", "Cross-check the series against the quadrature oracle (JSON)");
    add_config_file(*verify_cmd, config_path);
    add_profile_options(*verify_cmd, verify_args.profile);
    add_cavity_options(*verify_cmd, "idler", verify_args.idler);
    add_cavity_options(*verify_cmd, "signal", verify_args.signal);
    add_tolerance_options(*verify_cmd, verify_args.tol);
    verify_cmd->add_option("--delta_min_ps", verify_args.delta_min_ps, "Start delay (ps)")
        ->capture_default_str();
    verify_cmd->add_option("--delta_max_ps", verify_args.delta_max_ps, "End delay (ps)")
        ->capture_default_str();
    verify_cmd->add_option("--n_deltas", verify_args.n_deltas, "Number of checked delays")
        ->capture_default_str();
    verify_cmd->add_option("--tol", verify_args.tolerance, "Maximum allowed relative error")
        ->capture_default_str();
    verify_cmd->add_option("--quad_points", verify_args.quad_points, "Quadrature nodes")
        ->capture_default_str();
    verify_cmd
        ->add_option("--quad_halfwidth", verify_args.quad_halfwidth,
                     "Quadrature support in units of delta_omega")
        ->capture_default_str();
    verify_cmd
        ->add_option("--inject_rel_error", verify_args.inject_rel_error,
                     "Self-test: perturb the series by this relative error")
        ->capture_default_str();
    verify_cmd->add_option("--output", verify_args.output, "Output JSON path");

    try {
        std::vector<std::string> args =
            expand_config(std::vector<std::string>(argv + 1, argv + argc));
        std::reverse(args.begin(), args.end());
        app.parse(args);
        if (sweep_cmd->parsed()) run_sweep(sweep_args);
        if (cavity_cmd->parsed()) run_cavity_sweep(cavity_args);
        if (refl_cmd->parsed()) run_reflectance_sweep(refl_args);
        if (regions_cmd->parsed()) run_regions(regions_args);
        if (platform_cmd->parsed()) run_platform(platform_args);
        if (xor_cmd->parsed()) run_xor(xor_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

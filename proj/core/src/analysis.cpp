#include "homcav/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "homcav/constants.hpp"

namespace homcav {

namespace {

int retained_orders(double reflectance, double eps_weight) {
    const int order = truncation_order(reflectance, eps_weight);
    return order > 0 ? order - 1 : 0;
}

// Candidate region centers tau_ci*b - tau_cs*a for retained orders a, b,
// restricted to the sampled range, deduplicated and sorted.
std::vector<double> candidate_centers(const CoincidenceCurve& curve,
                                      const InterferometerConfig& config,
                                      const SeriesTolerances& tol, double merge_tol) {
    const Cavity idler = config.idler_or_none();
    const Cavity signal = config.signal_or_none();
    const double tau_i = idler.transit_time();
    const double tau_s = signal.transit_time();
    const int b_max = retained_orders(idler.reflectance(), tol.eps_weight);
    const int a_max = retained_orders(signal.reflectance(), tol.eps_weight);
    const double lo = curve.delays_s.front();
    const double hi = curve.delays_s.back();

    std::vector<double> centers;
    for (int a = 0; a <= a_max; ++a) {
        for (int b = 0; b <= b_max; ++b) {
            const double center = tau_i * b - tau_s * a;
            if (center < lo || center > hi) continue;
            centers.push_back(center);
        }
    }
    std::sort(centers.begin(), centers.end());
    std::vector<double> merged;
    for (double c : centers) {
        if (merged.empty() || c - merged.back() > merge_tol)
            merged.push_back(c);
    }
    return merged;
}

std::size_t nearest_sample(const std::vector<double>& delays, double value) {
    const auto it = std::lower_bound(delays.begin(), delays.end(), value);
    if (it == delays.begin()) return 0;
    if (it == delays.end()) return delays.size() - 1;
    const std::size_t hi = static_cast<std::size_t>(it - delays.begin());
    return (value - delays[hi - 1] <= delays[hi] - value) ? hi - 1 : hi;
}

}  // namespace

const char* to_string(RegionKind kind) {
    switch (kind) {
        case RegionKind::Peak: return "Peak";
        case RegionKind::Valley: return "Valley";
        case RegionKind::Flat: break;
    }
    return "Flat";
}

const char* to_string(SymmetryPattern pattern) {
    return pattern == SymmetryPattern::SY ? "SY" : "NS";
}

double platform_one_cavity(const Cavity& cavity) {
    const double r = cavity.reflectance();
    if (!(r < 1.0)) throw std::invalid_argument("platform_one_cavity: reflectance must be below 1");
    const double t = cavity.transmittance();
    return t * t / (1.0 - r * r);
}

double region_amplitude(int order, const Cavity& cavity, double lambda_pump_m) {
    if (order < 1) throw std::invalid_argument("region_amplitude: order must be >= 1");
    const double r = cavity.reflectance();
    if (!(r < 1.0)) throw std::invalid_argument("region_amplitude: reflectance must be below 1");

    const double theta = pump_phase(cavity.length(), lambda_pump_m);
    double kernel = 0.0;  // sum over the pairs n + q = order - 1
    for (int q = 0; q < order; ++q) kernel += std::cos(theta * (order - 1 - 2 * q));

    const double t2 = cavity.transmittance() * cavity.transmittance();
    return t2 / (1.0 - r * r) - t2 * std::pow(r, order - 1) * kernel;
}

double region_sigma(const SpectralProfile& profile) {
    return 1.0 / (std::sqrt(2.0) * profile.delta_omega());
}

double gaussian_overlap(double sigma_s, double spacing_s) {
    if (!(sigma_s > 0.0)) throw std::invalid_argument("gaussian_overlap: sigma must be positive");
    const double x = spacing_s / (2.0 * sigma_s);
    return std::sqrt(pi) * sigma_s * std::exp(-x * x);
}

std::vector<RegionReport> detect_regions(const CoincidenceCurve& curve,
                                         const InterferometerConfig& config,
                                         std::optional<double> flat_tol,
                                         const SeriesTolerances& tol) {
    validate(tol);
    if (curve.delays_s.size() != curve.rates.size() || curve.delays_s.size() < 2)
        throw std::invalid_argument("detect_regions: malformed curve");

    const double sigma = region_sigma(config.profile);
    const std::vector<double> centers = candidate_centers(curve, config, tol, 1e-3 * sigma);
    if (centers.empty()) return {};

    for (std::size_t i = 1; i < centers.size(); ++i) {
        if (centers[i] - centers[i - 1] < 4.0 * sigma)
            throw std::runtime_error(
                "detect_regions: candidate centers closer than 4 sigma, regions unresolvable");
    }

    // Platform from samples far from every candidate center.
    std::vector<double> far_rates;
    for (std::size_t i = 0; i < curve.delays_s.size(); ++i) {
        const double d = curve.delays_s[i];
        bool far = true;
        for (double c : centers) {
            if (std::fabs(d - c) <= 4.0 * sigma) {
                far = false;
                break;
            }
        }
        if (far) far_rates.push_back(curve.rates[i]);
    }
    if (far_rates.empty())
        throw std::runtime_error("detect_regions: no samples outside regions, cannot estimate platform");
    std::nth_element(far_rates.begin(), far_rates.begin() + far_rates.size() / 2, far_rates.end());
    const double platform = far_rates[far_rates.size() / 2];
    const double flat_band = flat_tol.value_or(1e-3 * platform);

    const bool single_arm = !(config.idler_cavity && config.signal_cavity);

    std::vector<RegionReport> reports;
    for (std::size_t ci = 0; ci < centers.size(); ++ci) {
        const double center = centers[ci];

        std::size_t within_sigma = 0;
        double vmin = 0.0, vmax = 0.0;
        bool have_window = false;
        for (std::size_t i = 0; i < curve.delays_s.size(); ++i) {
            const double dist = std::fabs(curve.delays_s[i] - center);
            if (dist <= sigma) ++within_sigma;
            if (dist <= 2.0 * sigma) {
                if (!have_window) {
                    vmin = vmax = curve.rates[i];
                    have_window = true;
                } else {
                    vmin = std::min(vmin, curve.rates[i]);
                    vmax = std::max(vmax, curve.rates[i]);
                }
            }
        }
        if (within_sigma < 5)
            throw std::runtime_error("detect_regions: under-sampled, need >= 5 samples within one sigma of delay " +
                                     std::to_string(center * 1e12) + " ps");

        RegionReport report;
        report.center_delay_s = center;
        const double dip = platform - vmin;
        const double rise = vmax - platform;
        if (std::max(dip, rise) <= flat_band) {
            report.kind = RegionKind::Flat;
            report.extremum_rate = curve.rates[nearest_sample(curve.delays_s, center)];
        } else if (dip >= rise) {
            report.kind = RegionKind::Valley;
            report.extremum_rate = vmin;
        } else {
            report.kind = RegionKind::Peak;
            report.extremum_rate = vmax;
        }

        if (single_arm) {
            const Cavity arm = config.idler_cavity ? *config.idler_cavity : config.signal_or_none();
            const double tau = arm.transit_time();
            const int order = tau > 0.0 ? 1 + static_cast<int>(std::lround(std::fabs(center) / tau)) : 1;
            report.order = order;
            report.closed_form_rate = region_amplitude(order, arm, config.profile.lambda_pump());
        }
        reports.push_back(report);
    }

    if (!single_arm) {
        // Rank two-cavity regions by distance from the origin.
        std::vector<std::size_t> idx(reports.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            const double da = std::fabs(reports[a].center_delay_s);
            const double db = std::fabs(reports[b].center_delay_s);
            if (da != db) return da < db;
            return reports[a].center_delay_s > reports[b].center_delay_s;
        });
        for (std::size_t rank = 0; rank < idx.size(); ++rank)
            reports[idx[rank]].order = static_cast<int>(rank + 1);
    }
    return reports;
}

int deepest_region_order(double reflectance, int j_max) {
    if (!(reflectance > 0.0 && reflectance < 1.0))
        throw std::invalid_argument("deepest_region_order: reflectance must lie in (0, 1)");
    if (j_max < 1) throw std::invalid_argument("deepest_region_order: j_max must be >= 1");

    int best = 1;
    double best_value = 1.0;  // j * R^(j-1) at j = 1
    double weight = 1.0;
    for (int j = 2; j <= j_max; ++j) {
        weight *= reflectance;
        const double value = j * weight;
        if (value > best_value) {
            best = j;
            best_value = value;
        }
    }
    return best;
}

double symmetry_score(const CoincidenceCurve& curve) {
    const std::size_t n = curve.delays_s.size();
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("symmetry_score: need an odd number of samples (>= 3)");
    const double span = curve.delays_s.back() - curve.delays_s.front();
    if (std::fabs(curve.delays_s.front() + curve.delays_s.back()) > 1e-9 * span)
        throw std::invalid_argument("symmetry_score: sweep range must be symmetric about zero");

    double max_rate = curve.rates.front();
    double min_rate = curve.rates.front();
    double max_asym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        max_rate = std::max(max_rate, curve.rates[i]);
        min_rate = std::min(min_rate, curve.rates[i]);
        max_asym = std::max(max_asym, std::fabs(curve.rates[i] - curve.rates[n - 1 - i]));
    }
    return max_asym / std::max(max_rate - min_rate, 1e-12);
}

XorResult xor_gate(int bit_idler, int bit_signal, const XorGateSetup& setup) {
    if ((bit_idler != 0 && bit_idler != 1) || (bit_signal != 0 && bit_signal != 1))
        throw std::invalid_argument("xor_gate: inputs must be bits");
    if (!(setup.resonant_length_m > 0.0 && setup.anti_resonant_length_m > 0.0))
        throw std::invalid_argument("xor_gate: reference lengths must be positive");
    if (setup.sweep_samples < 3 || setup.sweep_samples % 2 == 0)
        throw std::invalid_argument("xor_gate: sweep_samples must be odd and >= 3");

    const double idler_length =
        bit_idler == 0 ? setup.resonant_length_m : setup.anti_resonant_length_m;
    const double signal_length =
        bit_signal == 0 ? setup.resonant_length_m : setup.anti_resonant_length_m;

    const auto config = InterferometerConfig::with_both(Cavity(idler_length, setup.reflectance),
                                                        Cavity(signal_length, setup.reflectance),
                                                        setup.profile);
    const CoincidenceCurve curve = sweep(config, -setup.sweep_halfwidth_s, setup.sweep_halfwidth_s,
                                         setup.sweep_samples, setup.tolerances);

    XorResult result;
    result.input_idler = bit_idler;
    result.input_signal = bit_signal;
    result.symmetry_score = symmetry_score(curve);
    result.pattern =
        result.symmetry_score < setup.sym_threshold ? SymmetryPattern::SY : SymmetryPattern::NS;
    result.output = result.pattern == SymmetryPattern::NS ? 1 : 0;
    return result;
}

}  // namespace homcav

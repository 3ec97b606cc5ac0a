#include "homcav/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace homcav {

namespace {

// One interferometer arm with the reflection sums reindexed on s = n + q and
// d = n - q. d shares the parity of s and |d| <= s.
struct ArmSeries {
    double tau = 0.0;
    double theta = 0.0;  // pump phase per bounce, reduced mod 2*pi
    double reflectance = 0.0;
    double transmittance = 1.0;
    int s_max = 0;                // largest retained reflection order
    std::vector<double> powers;   // R^k for k in [0, s_max]
    std::vector<double> kernels;  // sum of cos(theta*d) over |d| <= s, d == s (mod 2)
};

int retained_orders(double reflectance, double eps_weight) {
    const int order = truncation_order(reflectance, eps_weight);
    return order > 0 ? order - 1 : 0;
}

ArmSeries make_arm(const Cavity& cavity, const SpectralProfile& profile,
                   const SeriesTolerances& tol) {
    ArmSeries arm;
    arm.tau = cavity.transit_time();
    arm.theta = pump_phase(cavity.length(), profile.lambda_pump());
    arm.reflectance = cavity.reflectance();
    arm.transmittance = cavity.transmittance();
    arm.s_max = retained_orders(arm.reflectance, tol.eps_weight);

    arm.powers.resize(arm.s_max + 1);
    arm.powers[0] = 1.0;
    for (int k = 1; k <= arm.s_max; ++k) arm.powers[k] = arm.powers[k - 1] * arm.reflectance;

    // Dirichlet kernel sum_{k=0..s} cos((2k - s) * theta) via the Chebyshev
    // recurrence; exact at theta = 0 and theta = pi.
    arm.kernels.resize(arm.s_max + 1);
    arm.kernels[0] = 1.0;
    const double c2 = 2.0 * std::cos(arm.theta);
    if (arm.s_max >= 1) arm.kernels[1] = c2;
    for (int s = 2; s <= arm.s_max; ++s)
        arm.kernels[s] = c2 * arm.kernels[s - 1] - arm.kernels[s - 2];
    return arm;
}

// Integer window [lo, hi] with |tau * k - center| <= halfwidth, clamped to
// [k_min, k_max] and widened by one index against boundary roundoff. May
// come back empty (lo > hi) when the band misses the index range.
std::pair<int, int> index_window(double center, double tau, double halfwidth, int k_min,
                                 int k_max) {
    if (tau <= 0.0) return {k_min, k_max};
    const double lo = std::ceil((center - halfwidth) / tau) - 1.0;
    const double hi = std::floor((center + halfwidth) / tau) + 1.0;
    if (lo > static_cast<double>(k_max) || hi < static_cast<double>(k_min)) return {1, 0};
    const int lo_i = lo <= static_cast<double>(k_min) ? k_min : static_cast<int>(lo);
    const int hi_i = hi >= static_cast<double>(k_max) ? k_max : static_cast<int>(hi);
    return {lo_i, hi_i};
}

double clamp_rate(double rate, SeriesDiagnostics* diag) {
    if (rate < 0.0) {
        if (diag) ++diag->negative_clamps;
        return 0.0;
    }
    return rate;
}

// Shared evaluation of the reindexed double series. "direct" collects the
// delta-independent pairings whose envelope couples the d indices; the
// geometric sums over s >= |d| are folded in exactly as R^|d| / (1 - R^2).
// "exchanged" collects the interference pairings whose envelope couples the
// s indices and the delay.
double evaluate_series(const ArmSeries& idler, const ArmSeries& signal, double delta_omega,
                       double delta, const SeriesTolerances& tol) {
    const double env_halfwidth = std::sqrt(-std::log(tol.eps_envelope)) / delta_omega;

    double direct = 0.0;
    for (int d1 = -signal.s_max; d1 <= signal.s_max; ++d1) {
        const double ws = signal.powers[std::abs(d1)] * std::cos(signal.theta * d1);
        const auto [lo, hi] =
            index_window(signal.tau * d1, idler.tau, env_halfwidth, -idler.s_max, idler.s_max);
        for (int d2 = lo; d2 <= hi; ++d2) {
            const double x = delta_omega * (signal.tau * d1 - idler.tau * d2);
            const double envelope = std::exp(-x * x);
            if (envelope < tol.eps_envelope) continue;
            direct += ws * idler.powers[std::abs(d2)] * std::cos(idler.theta * d2) * envelope;
        }
    }
    direct /= (1.0 - signal.reflectance * signal.reflectance) *
              (1.0 - idler.reflectance * idler.reflectance);

    double exchanged = 0.0;
    for (int s1 = 0; s1 <= signal.s_max; ++s1) {
        const double ws = signal.powers[s1] * signal.kernels[s1];
        const auto [lo, hi] =
            index_window(signal.tau * s1 + delta, idler.tau, env_halfwidth, 0, idler.s_max);
        for (int s2 = lo; s2 <= hi; ++s2) {
            const double x = delta_omega * (idler.tau * s2 - signal.tau * s1 - delta);
            const double envelope = std::exp(-x * x);
            if (envelope < tol.eps_envelope) continue;
            exchanged += ws * idler.powers[s2] * idler.kernels[s2] * envelope;
        }
    }

    const double t_product = idler.transmittance * signal.transmittance;
    return t_product * t_product * (direct - exchanged);
}

}  // namespace

void validate(const SeriesTolerances& tol) {
    if (!(tol.eps_weight > 0.0 && tol.eps_weight <= 1e-6))
        throw std::invalid_argument("SeriesTolerances: eps_weight must lie in (0, 1e-6]");
    if (!(tol.eps_envelope > 0.0 && tol.eps_envelope <= 1e-6))
        throw std::invalid_argument("SeriesTolerances: eps_envelope must lie in (0, 1e-6]");
}

int truncation_order(double reflectance, double eps_weight) {
    if (!(reflectance >= 0.0 && reflectance < 1.0))
        throw std::invalid_argument("truncation_order: reflectance must lie in [0, 1)");
    if (!(eps_weight > 0.0 && eps_weight < 1.0))
        throw std::invalid_argument("truncation_order: eps_weight must lie in (0, 1)");
    if (reflectance == 0.0) return 0;
    return static_cast<int>(std::ceil(std::log(eps_weight) / std::log(reflectance)));
}

double rate_bare(const SpectralProfile& profile, double delta_s) {
    const double x = profile.delta_omega() * delta_s;
    return 1.0 - std::exp(-x * x);
}

double rate_one_cavity(const Cavity& cavity, const SpectralProfile& profile, double delta_s,
                       const SeriesTolerances& tol, SeriesDiagnostics* diag) {
    validate(tol);
    const double dw = profile.delta_omega();
    const double env_halfwidth = std::sqrt(-std::log(tol.eps_envelope)) / dw;
    const ArmSeries arm = make_arm(cavity, profile, tol);

    double direct = 0.0;
    {
        const auto [lo, hi] = index_window(0.0, arm.tau, env_halfwidth, -arm.s_max, arm.s_max);
        for (int d = lo; d <= hi; ++d) {
            const double x = dw * arm.tau * d;
            const double envelope = std::exp(-x * x);
            if (envelope < tol.eps_envelope) continue;
            direct += arm.powers[std::abs(d)] * std::cos(arm.theta * d) * envelope;
        }
    }
    direct /= 1.0 - arm.reflectance * arm.reflectance;

    double exchanged = 0.0;
    {
        const auto [lo, hi] = index_window(delta_s, arm.tau, env_halfwidth, 0, arm.s_max);
        for (int s = lo; s <= hi; ++s) {
            const double x = dw * (arm.tau * s - delta_s);
            const double envelope = std::exp(-x * x);
            if (envelope < tol.eps_envelope) continue;
            exchanged += arm.powers[s] * arm.kernels[s] * envelope;
        }
    }

    const double t2 = arm.transmittance * arm.transmittance;
    return clamp_rate(t2 * (direct - exchanged), diag);
}

double rate_two_cavity(const InterferometerConfig& config, double delta_s,
                       const SeriesTolerances& tol, SeriesDiagnostics* diag) {
    validate(tol);
    const ArmSeries idler = make_arm(config.idler_or_none(), config.profile, tol);
    const ArmSeries signal = make_arm(config.signal_or_none(), config.profile, tol);
    const double rate = evaluate_series(idler, signal, config.profile.delta_omega(), delta_s, tol);
    return clamp_rate(rate, diag);
}

CoincidenceCurve sweep(const InterferometerConfig& config, double delta_min_s, double delta_max_s,
                       int n_samples, const SeriesTolerances& tol) {
    validate(tol);
    if (!(delta_min_s < delta_max_s))
        throw std::invalid_argument("sweep: delta_min must be smaller than delta_max");
    if (n_samples < 2) throw std::invalid_argument("sweep: need at least 2 samples");

    CoincidenceCurve curve{{}, {}, config, 0};
    curve.delays_s.resize(n_samples);
    curve.rates.resize(n_samples);

    const double step = (delta_max_s - delta_min_s) / (n_samples - 1);
    SeriesDiagnostics diag;
    const bool idler_only = config.idler_cavity.has_value() && !config.signal_cavity.has_value();
    const bool bare = !config.idler_cavity.has_value() && !config.signal_cavity.has_value();
    for (int i = 0; i < n_samples; ++i) {
        const double delta = i + 1 == n_samples ? delta_max_s : delta_min_s + i * step;
        curve.delays_s[i] = delta;
        if (bare) {
            curve.rates[i] = rate_bare(config.profile, delta);
        } else if (idler_only) {
            curve.rates[i] = rate_one_cavity(*config.idler_cavity, config.profile, delta, tol, &diag);
        } else {
            curve.rates[i] = rate_two_cavity(config, delta, tol, &diag);
        }
    }
    curve.negative_clamps = diag.negative_clamps;
    return curve;
}

}  // namespace homcav

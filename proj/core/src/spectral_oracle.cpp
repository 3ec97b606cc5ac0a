#include "homcav/spectral_oracle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "homcav/constants.hpp"

namespace homcav {

namespace {

constexpr double kConvergenceBound = 1e-10;

struct ArmTransfer {
    double tau = 0.0;
    double theta = 0.0;
    double reflectance = 0.0;
    double transmittance = 1.0;
};

ArmTransfer make_transfer(const Cavity& cavity, const SpectralProfile& profile) {
    return {cavity.transit_time(), pump_phase(cavity.length(), profile.lambda_pump()),
            cavity.reflectance(), cavity.transmittance()};
}

// Closed transfer function with the per-bounce phase sign_theta*theta + 2*nu*tau.
std::complex<double> arm_mu(const ArmTransfer& arm, double sign_theta, double nu) {
    const double phase = sign_theta * arm.theta + 2.0 * nu * arm.tau;
    return arm.transmittance /
           (1.0 - arm.reflectance * std::complex<double>(std::cos(phase), std::sin(phase)));
}

// Trapezoid quadrature of the pump-phase-averaged spectral integrand. The
// product of cosines in the series corresponds to an average over the two
// relative pump-phase signs; opposite sign pairs integrate identically, so
// only the idler sign is scanned.
double spectral_value(const ArmTransfer& idler, const ArmTransfer& signal, double delta_omega,
                      double delta, int n_points, double halfwidth_units) {
    const double span = halfwidth_units * delta_omega;
    const double step = 2.0 * span / (n_points - 1);

    double weight_sum = 0.0;
    double integral = 0.0;
    for (int k = 0; k < n_points; ++k) {
        const double nu = -span + k * step;
        const double wq = (k == 0 || k + 1 == n_points) ? 0.5 : 1.0;
        const double wg = wq * std::exp(-(nu / delta_omega) * (nu / delta_omega));
        weight_sum += wg;

        const std::complex<double> signal_pos = arm_mu(signal, +1.0, nu);
        const std::complex<double> signal_neg = arm_mu(signal, +1.0, -nu);
        const std::complex<double> delta_phase(std::cos(2.0 * nu * delta),
                                               -std::sin(2.0 * nu * delta));
        double node = 0.0;
        for (const double rho : {+1.0, -1.0}) {
            const std::complex<double> m_pos = arm_mu(idler, rho, nu) * signal_neg;
            const std::complex<double> m_neg = arm_mu(idler, rho, -nu) * signal_pos;
            node += 0.5 * (std::norm(m_pos) - (delta_phase * m_pos * std::conj(m_neg)).real());
        }
        integral += wg * node;
    }
    // Normalizing by the discrete weight integral calibrates the bare plateau
    // to exactly 1 on the same grid.
    return integral / weight_sum;
}

}  // namespace

void validate(const QuadratureSpec& spec) {
    if (spec.n_points < 64) throw std::invalid_argument("QuadratureSpec: need n_points >= 64");
    if (!(spec.support_halfwidth >= 6.0))
        throw std::invalid_argument("QuadratureSpec: support_halfwidth must be >= 6");
}

GaussianTermCheck gaussian_term_identity(double a_s, double b_s, double delta_omega,
                                         const QuadratureSpec& spec) {
    validate(spec);
    if (!(delta_omega > 0.0))
        throw std::invalid_argument("gaussian_term_identity: delta_omega must be positive");

    const auto evaluate = [&](int n_points) {
        const double span = spec.support_halfwidth * delta_omega;
        const double step = 2.0 * span / (n_points - 1);
        double sum = 0.0;
        for (int k = 0; k < n_points; ++k) {
            const double nu = -span + k * step;
            const double wq = (k == 0 || k + 1 == n_points) ? 0.5 : 1.0;
            sum += wq * std::exp(-(nu / delta_omega) * (nu / delta_omega)) *
                   (std::cos(2.0 * nu * a_s) - std::cos(2.0 * nu * b_s));
        }
        return sum * step / (std::sqrt(pi) * delta_omega);
    };

    GaussianTermCheck check;
    const double coarse = evaluate(spec.n_points);
    check.numeric = evaluate(2 * spec.n_points);
    check.refinement_delta = check.numeric - coarse;
    check.converged = std::fabs(check.refinement_delta) <= kConvergenceBound;
    const double xa = delta_omega * a_s;
    const double xb = delta_omega * b_s;
    check.closed_form = std::exp(-xa * xa) - std::exp(-xb * xb);
    return check;
}

std::complex<double> mu_tilde(const Cavity& cavity, double nu, double pump_phase) {
    if (!(cavity.reflectance() < 1.0))
        throw std::invalid_argument("mu_tilde: reflectance must be below 1");
    const double phase = pump_phase + nu * cavity.transit_time();
    return cavity.transmittance() /
           (1.0 - cavity.reflectance() * std::complex<double>(std::cos(phase), std::sin(phase)));
}

SpectralRate rate_spectral(const InterferometerConfig& config, double delta_s,
                           const QuadratureSpec& spec) {
    validate(spec);
    const ArmTransfer idler = make_transfer(config.idler_or_none(), config.profile);
    const ArmTransfer signal = make_transfer(config.signal_or_none(), config.profile);
    const double dw = config.profile.delta_omega();

    SpectralRate rate;
    const double coarse =
        spectral_value(idler, signal, dw, delta_s, spec.n_points, spec.support_halfwidth);
    rate.value =
        spectral_value(idler, signal, dw, delta_s, 2 * spec.n_points, spec.support_halfwidth);
    rate.refinement_delta = rate.value - coarse;
    rate.converged = std::fabs(rate.refinement_delta) <= kConvergenceBound;
    return rate;
}

const char* spectral_phase_convention() {
    return "per-bounce phase theta_j + 2*nu*tau_j with theta_j = 2*pi*frac(L_j/lambda_p), "
           "averaged over the relative pump-phase sign; exchanged arguments (idler +nu, "
           "signal -nu); delay phase exp(-2*i*nu*delta); Gaussian weight normalized to unit "
           "integral on the quadrature grid";
}

}  // namespace homcav

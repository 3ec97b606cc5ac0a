#pragma once

#include <complex>

#include "homcav/interferometer.hpp"

namespace homcav {

/// Frequency-quadrature grid: n_points trapezoid nodes spanning
/// [-support_halfwidth * delta_omega, +support_halfwidth * delta_omega].
struct QuadratureSpec {
    int n_points = 16384;
    double support_halfwidth = 8.0;
};

void validate(const QuadratureSpec& spec);

struct GaussianTermCheck {
    double numeric = 0.0;      // quadrature value, normalized by sqrt(pi)*dw
    double closed_form = 0.0;  // exp(-dw^2 a^2) - exp(-dw^2 b^2)
    double refinement_delta = 0.0;
    bool converged = false;
};

/// Checks the Gaussian-integral step used by the series: the quadrature of
/// exp(-nu^2/dw^2) * [cos(2 nu a) - cos(2 nu b)] against its closed form.
GaussianTermCheck gaussian_term_identity(double a_s, double b_s, double delta_omega,
                                         const QuadratureSpec& spec = {});

/// Closed geometric form of the cavity transfer series,
/// T / (1 - R * exp(i * (pump_phase + nu * tau_c))).
std::complex<double> mu_tilde(const Cavity& cavity, double nu, double pump_phase);

struct SpectralRate {
    double value = 0.0;
    double refinement_delta = 0.0;  // change when the node count is doubled
    bool converged = false;
};

/// Recomputes the coincidence rate by frequency quadrature over the closed
/// transfer functions. Matches the reflection series term for term.
SpectralRate rate_spectral(const InterferometerConfig& config, double delta_s,
                           const QuadratureSpec& spec = {});

/// Human-readable record of the sign and normalization conventions baked
/// into rate_spectral.
const char* spectral_phase_convention();

}  // namespace homcav

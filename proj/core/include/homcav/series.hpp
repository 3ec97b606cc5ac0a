#pragma once

#include <cstddef>

#include "homcav/curve.hpp"
#include "homcav/interferometer.hpp"

namespace homcav {

/// Cutoffs for the formally infinite reflection series.
struct SeriesTolerances {
    double eps_weight = 1e-10;    // drop reflection orders with R^s below this
    double eps_envelope = 1e-14;  // treat Gaussian factors below this as zero
};

void validate(const SeriesTolerances& tol);

/// Smallest M with R^M < eps_weight (0 when R = 0). Retained reflection
/// orders are s = 0 .. M-1.
int truncation_order(double reflectance, double eps_weight);

struct SeriesDiagnostics {
    std::size_t negative_clamps = 0;
};

/// Coincidence rate of the bare interferometer, 1 - exp(-dw^2 delta^2).
double rate_bare(const SpectralProfile& profile, double delta_s);

/// Coincidence rate with a single cavity in the idler arm.
double rate_one_cavity(const Cavity& cavity, const SpectralProfile& profile, double delta_s,
                       const SeriesTolerances& tol = {}, SeriesDiagnostics* diag = nullptr);

/// General rate with cavities in both arms; absent cavities reduce it to the
/// one-cavity and bare cases.
double rate_two_cavity(const InterferometerConfig& config, double delta_s,
                       const SeriesTolerances& tol = {}, SeriesDiagnostics* diag = nullptr);

/// Uniform sweep over [delta_min, delta_max], endpoints included, using the
/// applicable rate function. Deterministic: output depends only on inputs.
CoincidenceCurve sweep(const InterferometerConfig& config, double delta_min_s, double delta_max_s,
                       int n_samples, const SeriesTolerances& tol = {});

}  // namespace homcav

#pragma once

#include <optional>
#include <vector>

#include "homcav/curve.hpp"
#include "homcav/interferometer.hpp"
#include "homcav/series.hpp"

namespace homcav {

enum class RegionKind { Peak, Valley, Flat };

const char* to_string(RegionKind kind);

/// One interference region of a sampled curve.
struct RegionReport {
    int order = 0;               // j = 1 for the region at delta = 0
    double center_delay_s = 0.0;
    double extremum_rate = 0.0;  // read from the curve near the center
    RegionKind kind = RegionKind::Flat;
    std::optional<double> closed_form_rate;  // one-cavity configurations only
};

/// Mesa level between interference regions, T^2 / (1 - R^2).
double platform_one_cavity(const Cavity& cavity);

/// Extremum rate of region j for a single cavity: the platform minus
/// T^2 R^(j-1) * sum of cos(theta * (n - q)) over the j pairs n + q = j - 1.
double region_amplitude(int order, const Cavity& cavity, double lambda_pump_m);

/// Gaussian width (s) of one interference region, 1 / (sqrt(2) * dw).
double region_sigma(const SpectralProfile& profile);

/// Overlap integral of two unit-height Gaussians of common width sigma whose
/// centers are `spacing` apart: sqrt(pi) * sigma * exp(-(spacing/(2 sigma))^2).
double gaussian_overlap(double sigma_s, double spacing_s);

/// Locates interference regions on a sampled curve: candidate centers from
/// the cavity transit times, extrema read in a +-2 sigma window, classified
/// against a robust platform estimate. flat_tol defaults to 1e-3 * platform.
std::vector<RegionReport> detect_regions(const CoincidenceCurve& curve,
                                         const InterferometerConfig& config,
                                         std::optional<double> flat_tol = std::nullopt,
                                         const SeriesTolerances& tol = {});

/// Order of the deepest valley in the resonant case: argmax of j * R^(j-1)
/// over j in [1, j_max], ties broken toward smaller j.
int deepest_region_order(double reflectance, int j_max);

/// Normalized asymmetry max|N(delta) - N(-delta)| / (max - min) of a curve
/// sampled symmetrically about zero with an odd sample count.
double symmetry_score(const CoincidenceCurve& curve);

enum class SymmetryPattern { SY, NS };

const char* to_string(SymmetryPattern pattern);

struct XorResult {
    int input_idler = 0;
    int input_signal = 0;
    double symmetry_score = 0.0;
    SymmetryPattern pattern = SymmetryPattern::SY;
    int output = 0;  // 0 for SY, 1 for NS
};

/// Fixed parameters of the cavity-encoded XOR gate: bit 0 selects the
/// resonant reference length, bit 1 the anti-resonant one.
struct XorGateSetup {
    SpectralProfile profile;
    double reflectance = 0.7;
    double resonant_length_m = 0.0;
    double anti_resonant_length_m = 0.0;
    double sweep_halfwidth_s = 4.2e-12;
    int sweep_samples = 1201;  // odd, so delta = 0 is sampled
    double sym_threshold = 0.05;
    SeriesTolerances tolerances;
};

/// Runs the gate end to end: set cavity lengths from the input bits, sweep
/// symmetrically about delta = 0 and classify the pattern.
XorResult xor_gate(int bit_idler, int bit_signal, const XorGateSetup& setup);

}  // namespace homcav

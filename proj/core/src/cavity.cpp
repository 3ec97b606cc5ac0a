#include "homcav/cavity.hpp"

#include <cmath>
#include <stdexcept>

#include "homcav/constants.hpp"

namespace homcav {

Cavity::Cavity(double length_m, double reflectance)
    : Cavity(length_m, reflectance, 1.0 - reflectance) {}

Cavity::Cavity(double length_m, double reflectance, double transmittance)
    : length_(length_m), reflectance_(reflectance), transmittance_(transmittance) {
    if (!(length_m >= 0.0) || !std::isfinite(length_m))
        throw std::invalid_argument("Cavity: length must be non-negative");
    if (!(reflectance >= 0.0 && reflectance < 1.0))
        throw std::invalid_argument("Cavity: reflectance must lie in [0, 1)");
    if (!(transmittance > 0.0 && transmittance <= 1.0))
        throw std::invalid_argument("Cavity: transmittance must lie in (0, 1]");
    if (reflectance + transmittance > 1.0 + 1e-12)
        throw std::invalid_argument("Cavity: R + T must not exceed 1");
}

double Cavity::transit_time() const { return length_ / speed_of_light; }

double cavity_transit_time(const Cavity& cavity) { return cavity.transit_time(); }

double pump_phase(double length_m, double lambda_pump_m) {
    if (length_m == 0.0) return 0.0;
    const double orders = length_m / lambda_pump_m;
    return 2.0 * pi * (orders - std::floor(orders));
}

const char* to_string(ResonanceKind kind) {
    switch (kind) {
        case ResonanceKind::Resonant: return "Resonant";
        case ResonanceKind::AntiResonant: return "AntiResonant";
        case ResonanceKind::Neither: break;
    }
    return "Neither";
}

ResonanceClass classify_cavity(double length_m, double lambda_pump_m, double tol_res) {
    if (!(length_m > 0.0)) throw std::invalid_argument("classify_cavity: length must be positive");
    if (!(lambda_pump_m > 0.0))
        throw std::invalid_argument("classify_cavity: lambda_pump must be positive");
    if (!(tol_res > 0.0 && tol_res < 0.25))
        throw std::invalid_argument("classify_cavity: tol_res must lie in (0, 0.25)");

    const double orders = length_m / lambda_pump_m;
    const double frac = orders - std::floor(orders);

    ResonanceClass result;
    result.fractional_order = frac;
    const double to_integer = std::fabs(frac - std::round(frac));
    if (to_integer <= tol_res) {
        result.kind = ResonanceKind::Resonant;
    } else if (std::fabs(frac - 0.5) <= tol_res) {
        result.kind = ResonanceKind::AntiResonant;
    } else {
        result.kind = ResonanceKind::Neither;
    }
    return result;
}

}  // namespace homcav

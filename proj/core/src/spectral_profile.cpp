#include "homcav/spectral_profile.hpp"

#include <cmath>
#include <stdexcept>

#include "homcav/constants.hpp"

namespace homcav {

SpectralProfile::SpectralProfile(double lambda_center_m, double lambda_pump_m,
                                 double delta_lambda_m)
    : lambda_center_(lambda_center_m), lambda_pump_(lambda_pump_m), delta_lambda_(delta_lambda_m) {
    if (!(lambda_center_m > 0.0) || !std::isfinite(lambda_center_m))
        throw std::invalid_argument("SpectralProfile: lambda_center must be positive");
    if (!(lambda_pump_m > 0.0) || !std::isfinite(lambda_pump_m))
        throw std::invalid_argument("SpectralProfile: lambda_pump must be positive");
    if (!(delta_lambda_m > 0.0) || !std::isfinite(delta_lambda_m))
        throw std::invalid_argument("SpectralProfile: delta_lambda must be positive");
    if (!std::isfinite(delta_omega()))
        throw std::invalid_argument("SpectralProfile: derived delta_omega is not finite");
}

SpectralProfile SpectralProfile::degenerate(double lambda_center_m, double delta_lambda_m) {
    return SpectralProfile(lambda_center_m, 0.5 * lambda_center_m, delta_lambda_m);
}

double SpectralProfile::delta_omega() const {
    return 2.0 * pi * speed_of_light * delta_lambda_ / (lambda_center_ * lambda_center_);
}

double SpectralProfile::pump_omega() const { return 2.0 * pi * speed_of_light / lambda_pump_; }

double delta_omega(const SpectralProfile& profile) { return profile.delta_omega(); }

}  // namespace homcav

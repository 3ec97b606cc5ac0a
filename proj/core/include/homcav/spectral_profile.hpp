#pragma once

namespace homcav {

/// Spectral description of the photon pair: central wavelength of the twin
/// photons, pump wavelength and the width of the interference filters in
/// front of the detectors. All lengths in meters.
class SpectralProfile {
public:
    SpectralProfile(double lambda_center_m, double lambda_pump_m, double delta_lambda_m);

    /// Degenerate source: pump at half the photon wavelength.
    static SpectralProfile degenerate(double lambda_center_m, double delta_lambda_m);

    double lambda_center() const { return lambda_center_; }
    double lambda_pump() const { return lambda_pump_; }
    double delta_lambda() const { return delta_lambda_; }

    /// Gaussian spectral width, 2*pi*c*delta_lambda/lambda^2 (rad/s).
    double delta_omega() const;

    /// Pump angular frequency 2*pi*c/lambda_pump (rad/s).
    double pump_omega() const;

private:
    double lambda_center_;
    double lambda_pump_;
    double delta_lambda_;
};

double delta_omega(const SpectralProfile& profile);

}  // namespace homcav

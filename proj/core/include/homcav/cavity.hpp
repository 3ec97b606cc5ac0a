#pragma once

namespace homcav {

/// Symmetric Fabry-Perot cavity: two identical planar mirrors a distance
/// `length` apart. R and T are intensity coefficients; R + T < 1 models
/// lossy mirrors. The amplitude coefficients are taken as the real
/// non-negative roots sqrt(R), sqrt(T).
class Cavity {
public:
    /// Lossless cavity, T = 1 - R.
    Cavity(double length_m, double reflectance);
    Cavity(double length_m, double reflectance, double transmittance);

    /// Stand-in for an empty interferometer arm (R=0, T=1, L=0).
    static Cavity none() { return Cavity(0.0, 0.0); }

    double length() const { return length_; }
    double reflectance() const { return reflectance_; }
    double transmittance() const { return transmittance_; }

    /// Single-pass transit time L/c (s).
    double transit_time() const;

    bool is_absent() const { return length_ == 0.0 && reflectance_ == 0.0; }

private:
    double length_;
    double reflectance_;
    double transmittance_;
};

double cavity_transit_time(const Cavity& cavity);

/// Per-bounce pump phase 2*pi*frac(L/lambda_pump), reduced to [0, 2*pi).
double pump_phase(double length_m, double lambda_pump_m);

enum class ResonanceKind { Resonant, AntiResonant, Neither };

const char* to_string(ResonanceKind kind);

struct ResonanceClass {
    ResonanceKind kind = ResonanceKind::Neither;
    double fractional_order = 0.0;  // frac(L / lambda_pump)
};

/// Classifies the cavity length against integer (resonant) and half-integer
/// (anti-resonant) multiples of the pump wavelength. tol_res is a fraction
/// of lambda_pump; it must stay in (0, 0.25) or the classes would overlap.
ResonanceClass classify_cavity(double length_m, double lambda_pump_m, double tol_res = 1e-3);

}  // namespace homcav

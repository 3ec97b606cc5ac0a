#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "homcav/homcav.hpp"
#include "support/reference.hpp"

using namespace homcav;
using doctest::Approx;

TEST_CASE("gaussian term identity: trivial and frozen cases") {
    const double dw = testing::reference_profile().delta_omega();

    const auto equal_args = gaussian_term_identity(0.8 / dw, 0.8 / dw, dw);
    CHECK(equal_args.closed_form == 0.0);
    CHECK(std::fabs(equal_args.numeric) <= 1e-14);
    CHECK(equal_args.converged);

    const auto wide_b = gaussian_term_identity(0.0, 50.0 / dw, dw);
    CHECK(wide_b.closed_form == Approx(1.0).epsilon(1e-15));
    CHECK(wide_b.numeric == Approx(1.0).epsilon(1e-10));
    CHECK(wide_b.converged);

    const auto frozen = gaussian_term_identity(1.0 / dw, 2.0 / dw, dw);
    CHECK(frozen.closed_form == Approx(0.34956380228270817).epsilon(1e-14));
    CHECK(std::fabs(frozen.numeric - frozen.closed_form) <= 1e-10);
    CHECK(frozen.converged);
}

TEST_CASE("gaussian term identity agrees on random argument pairs") {
    const double dw = testing::reference_profile().delta_omega();
    std::mt19937 rng(61803);
    std::uniform_real_distribution<double> arg(0.0, 5.0);
    for (int i = 0; i < 100; ++i) {
        const double a = arg(rng) / dw;
        const double b = arg(rng) / dw;
        const auto check = gaussian_term_identity(a, b, dw);
        CHECK(std::fabs(check.numeric - check.closed_form) <= 1e-10);
        CHECK(check.converged);
    }
}

TEST_CASE("gaussian term identity flags an unconverged grid") {
    const double dw = testing::reference_profile().delta_omega();
    // 64 nodes cannot resolve a cos(2*nu*b) factor with b = 50/dw.
    const auto coarse = gaussian_term_identity(0.0, 50.0 / dw, dw, QuadratureSpec{64, 8.0});
    CHECK_FALSE(coarse.converged);
}

TEST_CASE("quadrature spec validation") {
    CHECK_THROWS_AS(validate(QuadratureSpec{32, 8.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(QuadratureSpec{4096, 4.0}), std::invalid_argument);
    CHECK_NOTHROW(validate(QuadratureSpec{}));
}

TEST_CASE("mu_tilde closed form") {
    const Cavity open_arm(0.0, 0.0);
    CHECK(mu_tilde(open_arm, 3e13, 0.0) == std::complex<double>(1.0, 0.0));

    const Cavity cavity(testing::kLengthResonant, 0.7);
    CHECK(std::abs(mu_tilde(cavity, 0.0, 0.0) - std::complex<double>(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(mu_tilde(cavity, 0.0, pi) - std::complex<double>(0.3 / 1.7, 0.0)) < 1e-15);
}

TEST_CASE("mu_tilde magnitude is bounded by T/(1-R)") {
    const Cavity cavity(testing::kLengthResonant, 0.7);
    const double bound = cavity.transmittance() / (1.0 - cavity.reflectance());
    std::mt19937 rng(27182);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> nu(-2e14, 2e14);
    for (int i = 0; i < 300; ++i) {
        const double magnitude = std::abs(mu_tilde(cavity, nu(rng), phase(rng)));
        CHECK(magnitude <= bound + 1e-12);
    }
    CHECK(std::abs(mu_tilde(cavity, 0.0, 0.0)) == Approx(bound).epsilon(1e-15));
}

TEST_CASE("spectral rate of the bare interferometer is the analytic dip") {
    const auto profile = testing::reference_profile();
    const auto config = InterferometerConfig::bare(profile);
    for (double delta : {0.0, 2e-14, 5e-14, -8e-14, 2e-13}) {
        const SpectralRate rate = rate_spectral(config, delta);
        CHECK(rate.converged);
        CHECK(std::fabs(rate.value - rate_bare(profile, delta)) <= 1e-10);
    }
}

TEST_CASE("spectral rate vanishes at zero delay for identical resonant cavities") {
    const auto profile = testing::reference_profile();
    const Cavity cavity(testing::kLengthResonant, 0.7);
    const auto config = InterferometerConfig::with_both(cavity, cavity, profile);
    const SpectralRate rate = rate_spectral(config, 0.0);
    CHECK(rate.converged);
    CHECK(std::fabs(rate.value) <= 1e-12);
}

TEST_CASE("spectral rate reproduces the second resonant valley") {
    const auto profile = testing::reference_profile();
    const Cavity cavity(testing::kLengthResonant, 0.7);
    const auto config = InterferometerConfig::with_idler(cavity, profile);
    const SpectralRate rate = rate_spectral(config, cavity.transit_time());
    CHECK(rate.converged);
    CHECK(rate.value == Approx(0.0504705882352941).epsilon(1e-6));
}

TEST_CASE("oracle equivalence against the series over the canonical configurations") {
    const auto profile = testing::reference_profile();
    const std::vector<InterferometerConfig> configs = {
        InterferometerConfig::bare(profile),
        InterferometerConfig::with_idler(Cavity(testing::kLengthResonant, 0.7), profile),
        InterferometerConfig::with_both(Cavity(testing::kLengthAntiResonant, 0.7),
                                        Cavity(testing::kLengthResonant, 0.7), profile),
    };
    for (const auto& config : configs) {
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            const double delta = (-2.0 + 10.0 * i / 24.0) * 1e-12;
            const double series = rate_two_cavity(config, delta);
            const SpectralRate spectral = rate_spectral(config, delta);
            CHECK(spectral.converged);
            CHECK(std::fabs(spectral.refinement_delta) < 1e-10);
            worst = std::max(worst,
                             std::fabs(spectral.value - series) / std::max(series, 1e-6));
        }
        CHECK(worst <= 1e-6);
    }
}

TEST_CASE("phase convention metadata is present") {
    const std::string convention = spectral_phase_convention();
    CHECK(convention.find("2*nu*tau") != std::string::npos);
    CHECK(convention.find("pump-phase") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "homcav/homcav.hpp"
#include "support/reference.hpp"

using namespace homcav;
using doctest::Approx;

TEST_CASE("delta_omega for the reference profile") {
    const auto profile = testing::reference_profile();
    CHECK(profile.delta_omega() == Approx(2.2075989406825438e13).epsilon(1e-13));
    CHECK(delta_omega(profile) == profile.delta_omega());

    const SpectralProfile narrow = SpectralProfile::degenerate(826.2e-9, 4e-9);
    CHECK(narrow.delta_omega() == Approx(1.1037994703412719e13).epsilon(1e-13));
    CHECK(narrow.delta_omega() == Approx(0.5 * profile.delta_omega()).epsilon(1e-15));

    // Monochromatic limit: linear in delta_lambda.
    const SpectralProfile mono = SpectralProfile::degenerate(826.2e-9, 1e-20);
    CHECK(mono.delta_omega() < 1e-10 * profile.delta_omega());
}

TEST_CASE("delta_omega monotonicity") {
    std::mt19937 rng(7121);
    std::uniform_real_distribution<double> lambda_nm(400.0, 1600.0);
    std::uniform_real_distribution<double> width_nm(0.5, 20.0);
    for (int i = 0; i < 200; ++i) {
        const double lambda = lambda_nm(rng) * 1e-9;
        const double width = width_nm(rng) * 1e-9;
        const SpectralProfile base = SpectralProfile::degenerate(lambda, width);
        CHECK(SpectralProfile::degenerate(lambda, width * 1.1).delta_omega() >
              base.delta_omega());
        CHECK(SpectralProfile::degenerate(lambda * 1.1, width).delta_omega() <
              base.delta_omega());
    }
}

TEST_CASE("profile validation and degenerate constructor") {
    CHECK_THROWS_AS(SpectralProfile(-1.0, 413.1e-9, 8e-9), std::invalid_argument);
    CHECK_THROWS_AS(SpectralProfile(826.2e-9, 0.0, 8e-9), std::invalid_argument);
    CHECK_THROWS_AS(SpectralProfile(826.2e-9, 413.1e-9, -8e-9), std::invalid_argument);

    const auto degenerate = SpectralProfile::degenerate(826.2e-9, 8e-9);
    CHECK(std::fabs(degenerate.lambda_pump() - 0.5 * degenerate.lambda_center()) /
              degenerate.lambda_pump() <
          1e-9);
}

TEST_CASE("cavity transit time") {
    CHECK(Cavity(testing::kLengthResonant, 0.7).transit_time() ==
          Approx(1.3503942117182948e-12).epsilon(1e-15));
    CHECK(Cavity(0.4e-3, 0.7).transit_time() == Approx(1.3342563807926082e-12).epsilon(1e-15));
    CHECK(Cavity::none().transit_time() == 0.0);
    CHECK(cavity_transit_time(Cavity(testing::kLengthResonant, 0.7)) ==
          Cavity(testing::kLengthResonant, 0.7).transit_time());
}

TEST_CASE("cavity invariants") {
    CHECK_THROWS_AS(Cavity(0.4e-3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Cavity(0.4e-3, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(Cavity(-0.4e-3, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Cavity(0.4e-3, 0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Cavity(0.4e-3, 0.5, 0.6), std::invalid_argument);  // R + T > 1

    const Cavity lossless(0.4e-3, 0.7);
    CHECK(lossless.transmittance() == Approx(0.3));
    const Cavity lossy(0.4e-3, 0.7, 0.25);
    CHECK(lossy.reflectance() + lossy.transmittance() < 1.0);
}

TEST_CASE("resonance classification of the reference lengths") {
    const auto resonant = classify_cavity(testing::kLengthResonant, testing::kLambdaPump);
    CHECK(resonant.kind == ResonanceKind::Resonant);
    CHECK(std::fabs(resonant.fractional_order - std::round(resonant.fractional_order)) < 1e-9);

    const auto anti = classify_cavity(testing::kLengthAntiResonant, testing::kLambdaPump);
    CHECK(anti.kind == ResonanceKind::AntiResonant);
    CHECK(anti.fractional_order == Approx(0.5003631082062157).epsilon(1e-10));

    const auto neither = classify_cavity(testing::kLengthNeither, testing::kLambdaPump);
    CHECK(neither.kind == ResonanceKind::Neither);
    CHECK(neither.fractional_order == Approx(0.28854998789643105).epsilon(1e-10));
}

TEST_CASE("classification rejects degenerate tolerances") {
    CHECK_THROWS_AS(classify_cavity(0.4e-3, testing::kLambdaPump, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(classify_cavity(0.4e-3, testing::kLambdaPump, 0.25), std::invalid_argument);
    CHECK_THROWS_AS(classify_cavity(0.0, testing::kLambdaPump), std::invalid_argument);
}

TEST_CASE("classification is periodic in the pump wavelength") {
    std::mt19937 rng(40117);
    std::uniform_real_distribution<double> fraction(0.0, 1.0);
    std::uniform_int_distribution<int> base_order(20, 2000);
    std::uniform_int_distribution<int> shift(1, 500);
    int tested = 0;
    while (tested < 200) {
        const double frac = fraction(rng);
        // Stay away from the classification boundaries so that floating-point
        // noise in L + k*lambda_p cannot flip the class.
        const double boundary = std::min({frac, std::fabs(frac - 0.5), 1.0 - frac});
        if (std::fabs(boundary - 1e-3) < 5e-3) continue;
        const double length = (base_order(rng) + frac) * testing::kLambdaPump;
        const double shifted = length + shift(rng) * testing::kLambdaPump;
        const auto a = classify_cavity(length, testing::kLambdaPump);
        const auto b = classify_cavity(shifted, testing::kLambdaPump);
        CHECK(a.kind == b.kind);
        ++tested;
    }
}

TEST_CASE("operating regime: delta_omega * tau_c near 30") {
    const auto profile = testing::reference_profile();
    const double product =
        profile.delta_omega() * Cavity(testing::kLengthResonant, 0.7).transit_time();
    CHECK(product == Approx(29.811288312931463).epsilon(1e-12));
    CHECK(product > 30.0 * 0.99);
}

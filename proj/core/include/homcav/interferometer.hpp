#pragma once

#include <optional>
#include <utility>

#include "homcav/cavity.hpp"
#include "homcav/spectral_profile.hpp"

namespace homcav {

/// Interferometer description: zero, one or two cavities plus the spectral
/// profile. A missing cavity behaves as R=0, T=1, tau_c=0. The path delay
/// delta = delta_i - delta_s is an argument of the rate operations, not part
/// of the configuration.
struct InterferometerConfig {
    std::optional<Cavity> idler_cavity;
    std::optional<Cavity> signal_cavity;
    SpectralProfile profile;

    static InterferometerConfig bare(SpectralProfile profile) {
        return {std::nullopt, std::nullopt, std::move(profile)};
    }
    static InterferometerConfig with_idler(Cavity idler, SpectralProfile profile) {
        return {idler, std::nullopt, std::move(profile)};
    }
    static InterferometerConfig with_both(Cavity idler, Cavity signal, SpectralProfile profile) {
        return {idler, signal, std::move(profile)};
    }

    Cavity idler_or_none() const { return idler_cavity ? *idler_cavity : Cavity::none(); }
    Cavity signal_or_none() const { return signal_cavity ? *signal_cavity : Cavity::none(); }
};

}  // namespace homcav

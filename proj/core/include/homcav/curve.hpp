#pragma once

#include <cstddef>
#include <vector>

#include "homcav/interferometer.hpp"

namespace homcav {

/// Sampled coincidence-rate curve N_c(delta) produced by a sweep.
struct CoincidenceCurve {
    std::vector<double> delays_s;  // strictly increasing
    std::vector<double> rates;     // same length, clamped to >= 0
    InterferometerConfig config;
    std::size_t negative_clamps = 0;  // roundoff clamps recorded while sweeping
};

}  // namespace homcav

#pragma once

#include "homcav/analysis.hpp"
#include "homcav/cavity.hpp"
#include "homcav/constants.hpp"
#include "homcav/curve.hpp"
#include "homcav/interferometer.hpp"
#include "homcav/io.hpp"
#include "homcav/series.hpp"
#include "homcav/spectral_oracle.hpp"
#include "homcav/spectral_profile.hpp"

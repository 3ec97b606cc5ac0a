#pragma once

namespace homcav {

// Exact SI value, fixed so emitted files reproduce to the last digit.
inline constexpr double speed_of_light = 299792458.0;  // m/s

inline constexpr double pi = 3.14159265358979323846;

}  // namespace homcav

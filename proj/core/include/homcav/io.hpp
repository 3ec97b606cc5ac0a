#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "homcav/curve.hpp"

namespace homcav::io {

/// Formats a value with 12 significant digits (%.12g). All emitted files go
/// through this so that identical inputs give byte-identical outputs.
std::string format_number(double value);

/// Two-column CSV with LF line endings.
void write_xy_csv(const std::filesystem::path& path, const std::string& x_header,
                  const std::string& y_header, const std::vector<double>& xs,
                  const std::vector<double>& ys);

struct XyData {
    std::string x_header;
    std::string y_header;
    std::vector<double> xs;
    std::vector<double> ys;
};

XyData read_xy_csv(const std::filesystem::path& path);

/// Sweep curve as `delay_ps,rate`.
void write_curve_csv(const std::filesystem::path& path, const CoincidenceCurve& curve);

struct CsvCurve {
    std::vector<double> delays_s;
    std::vector<double> rates;
};

CsvCurve read_curve_csv(const std::filesystem::path& path);

}  // namespace homcav::io

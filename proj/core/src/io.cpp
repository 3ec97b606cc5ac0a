#include "homcav/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace homcav::io {

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

void write_xy_csv(const std::filesystem::path& path, const std::string& x_header,
                  const std::string& y_header, const std::vector<double>& xs,
                  const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("write_xy_csv: column size mismatch");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_xy_csv: cannot open " + path.string());
    out << x_header << ',' << y_header << '\n';
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << format_number(xs[i]) << ',' << format_number(ys[i]) << '\n';
    if (!out) throw std::runtime_error("write_xy_csv: write failed for " + path.string());
}

XyData read_xy_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_xy_csv: cannot open " + path.string());

    XyData data;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_xy_csv: empty file");
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("read_xy_csv: malformed header");
    data.x_header = line.substr(0, comma);
    data.y_header = line.substr(comma + 1);

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        double x = 0.0, y = 0.0;
        char sep = 0;
        if (!(row >> x >> sep >> y) || sep != ',')
            throw std::runtime_error("read_xy_csv: malformed row: " + line);
        data.xs.push_back(x);
        data.ys.push_back(y);
    }
    return data;
}

void write_curve_csv(const std::filesystem::path& path, const CoincidenceCurve& curve) {
    std::vector<double> delays_ps(curve.delays_s.size());
    for (std::size_t i = 0; i < delays_ps.size(); ++i) delays_ps[i] = curve.delays_s[i] * 1e12;
    write_xy_csv(path, "delay_ps", "rate", delays_ps, curve.rates);
}

CsvCurve read_curve_csv(const std::filesystem::path& path) {
    const XyData data = read_xy_csv(path);
    if (data.x_header != "delay_ps" || data.y_header != "rate")
        throw std::runtime_error("read_curve_csv: unexpected header " + data.x_header + "," +
                                 data.y_header);
    CsvCurve curve;
    curve.delays_s.resize(data.xs.size());
    for (std::size_t i = 0; i < data.xs.size(); ++i) curve.delays_s[i] = data.xs[i] * 1e-12;
    curve.rates = data.ys;
    return curve;
}

}  // namespace homcav::io

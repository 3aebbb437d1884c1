#include "seqexp/io/csv.hpp"

namespace seqexp::io {

namespace {

std::string field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string emit_csv(const std::vector<Point>& points, const std::string& header) {
    std::string out = header + "\n";
    for (const auto& [x, y] : points) out += field(x) + "," + field(y) + "\n";
    return out;
}

std::vector<Point> to_points(const std::vector<std::pair<asympt::HpReal, asympt::HpReal>>& pts) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const auto& [x, y] : pts) out.emplace_back(x.to_string(), y.to_string());
    return out;
}

}  // namespace seqexp::io

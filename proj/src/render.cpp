#include "gaussforge/render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gaussforge/errors.hpp"

namespace gaussforge {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRadius = 100.0;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

Point endpoint_at(std::uint32_t position, std::size_t m, double radius) {
    const double angle = 2.0 * kPi * position / static_cast<double>(m) - kPi / 2.0;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::string num(double v) {
    if (std::abs(v) < 0.005) v = 0.0; // avoid "-0.00"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* color_for(int sign) { return sign > 0 ? "#1f6feb" : "#d73a49"; }

} // namespace

std::string render_svg(const GaussDiagram& d) {
    const std::size_t m = d.endpoints().size();
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-120 -120 240 240\" "
           "width=\"480\" height=\"480\">\n";
    out << "  <defs>\n";
    out << "    <marker id=\"arrow-pos\" viewBox=\"0 0 8 8\" refX=\"7\" refY=\"4\" "
           "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto\">\n"
           "      <path d=\"M0,0 L8,4 L0,8 z\" fill=\"#1f6feb\"/>\n"
           "    </marker>\n";
    out << "    <marker id=\"arrow-neg\" viewBox=\"0 0 8 8\" refX=\"7\" refY=\"4\" "
           "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto\">\n"
           "      <path d=\"M0,0 L8,4 L0,8 z\" fill=\"#d73a49\"/>\n"
           "    </marker>\n";
    out << "  </defs>\n";
    out << "  <circle cx=\"0\" cy=\"0\" r=\"" << num(kRadius)
        << "\" fill=\"none\" stroke=\"#24292f\" stroke-width=\"1.5\"/>\n";

    for (std::uint32_t p = 0; p < m; ++p) {
        const Point tick = endpoint_at(p, m, kRadius + 12.0);
        out << "  <text x=\"" << num(tick.x) << "\" y=\"" << num(tick.y)
            << "\" font-size=\"8\" fill=\"#57606a\" text-anchor=\"middle\" "
               "dominant-baseline=\"middle\">"
            << p << "</text>\n";
    }

    for (std::size_t i = 0; i < d.size(); ++i) {
        const Chord& c = d.chord(i);
        const Point tail = endpoint_at(c.over_pos, m, kRadius);
        const Point head = endpoint_at(c.under_pos, m, kRadius);
        const char* color = color_for(c.sign);
        out << "  <line x1=\"" << num(tail.x) << "\" y1=\"" << num(tail.y) << "\" x2=\""
            << num(head.x) << "\" y2=\"" << num(head.y) << "\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" marker-end=\"url(#arrow-"
            << (c.sign > 0 ? "pos" : "neg") << ")\"/>\n";
        const Point mid{tail.x * 0.55 + head.x * 0.45, tail.y * 0.55 + head.y * 0.45};
        out << "  <text x=\"" << num(mid.x) << "\" y=\"" << num(mid.y)
            << "\" font-size=\"10\" fill=\"" << color
            << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << c.label
            << (c.sign > 0 ? "+" : "-") << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

void render_svg_file(const GaussDiagram& d, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file)
        fail(ErrorKind::IoError, "render", "cannot open '" + path + "' for writing");
    file << render_svg(d);
    file.flush();
    if (!file)
        fail(ErrorKind::IoError, "render", "failed writing '" + path + "'");
}

} // namespace gaussforge

#include "plandec/svg.hpp"

#include "plandec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace plandec {

namespace {

double approx(const rat& x) {
    auto [lo, hi] = to_interval(x);
    return (lo + hi) / 2;
}

// Display-only rounding; the exact coordinates live in the JSON artifact.
double snap(double v) { return std::round(v * 1e6) / 1e6; }

void put(std::ostringstream& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", snap(v));
    out << buf;
}

}  // namespace

std::string drawing_to_svg(const Drawing& d, bool mark_crossings) {
    std::vector<std::pair<double, double>> pts;
    for (const Pt& p : d.points) pts.push_back({approx(p.x), approx(p.y)});
    std::vector<std::vector<std::pair<double, double>>> routes;
    for (int e = 0; e < d.g.m(); ++e) {
        std::vector<std::pair<double, double>> r;
        for (const Pt& p : d.polyline(e)) r.push_back({approx(p.x), approx(p.y)});
        routes.push_back(std::move(r));
    }
    std::vector<CrossingEvent> events;
    if (mark_crossings) count_crossings(d, &events);

    double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
    bool first = true;
    auto grow = [&](double x, double y) {
        if (first) {
            xlo = xhi = x;
            ylo = yhi = y;
            first = false;
        } else {
            xlo = std::min(xlo, x), xhi = std::max(xhi, x);
            ylo = std::min(ylo, y), yhi = std::max(yhi, y);
        }
    };
    for (auto [x, y] : pts) grow(x, y);
    for (const auto& r : routes)
        for (auto [x, y] : r) grow(x, y);

    const double span = std::max({xhi - xlo, yhi - ylo, 1e-9});
    const double pad = span * 0.05;
    const double dot = span * 0.012;
    // SVG y grows downward; mirror so the drawing keeps its orientation.
    auto Y = [&](double y) { return yhi - y; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    put(out, xlo - pad);
    out << " ";
    put(out, -pad);
    out << " ";
    put(out, (xhi - xlo) + 2 * pad);
    out << " ";
    put(out, (yhi - ylo) + 2 * pad);
    out << "\">\n";

    for (const auto& r : routes) {
        out << "  <polyline fill=\"none\" stroke=\"#345\" stroke-width=\"";
        put(out, span * 0.004);
        out << "\" points=\"";
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) out << " ";
            put(out, r[i].first);
            out << ",";
            put(out, Y(r[i].second));
        }
        out << "\"/>\n";
    }
    for (std::size_t v = 0; v < pts.size(); ++v) {
        out << "  <circle cx=\"";
        put(out, pts[v].first);
        out << "\" cy=\"";
        put(out, Y(pts[v].second));
        out << "\" r=\"";
        put(out, dot);
        out << "\" fill=\"#c22\"/>\n";
        out << "  <text x=\"";
        put(out, pts[v].first + 1.5 * dot);
        out << "\" y=\"";
        put(out, Y(pts[v].second) - 1.5 * dot);
        out << "\" font-size=\"";
        put(out, 3 * dot);
        out << "\">" << v << "</text>\n";
    }
    for (const CrossingEvent& ev : events) {
        out << "  <circle cx=\"";
        put(out, approx(ev.point.x));
        out << "\" cy=\"";
        put(out, Y(approx(ev.point.y)));
        out << "\" r=\"";
        put(out, dot * 0.9);
        out << "\" fill=\"none\" stroke=\"#e80\" stroke-width=\"";
        put(out, span * 0.004);
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace plandec

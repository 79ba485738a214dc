#include "tiling/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace tiling {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRadius = 100.0;
constexpr double kSpacing = 260.0;
constexpr double kMargin = 40.0;

struct Point {
    double x, y;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Diagram& d) {
    const int n = d.n(), f = d.f();
    const double width = kSpacing * f + 2 * kMargin - (kSpacing - 2 * kRadius);
    const double height = 2 * kRadius + 2 * kMargin;
    auto center = [&](int tile) {
        return Point{kMargin + kRadius + kSpacing * (tile - 1), kMargin + kRadius};
    };
    // Corner i sits at angle 90 + i*360/n degrees (counterclockwise), as in
    // the prototile figure; edge i's midpoint halfway to corner i+1.
    auto corner_pos = [&](int tile, int label, double r) {
        double a = kPi / 2 + 2 * kPi * label / n;
        Point c = center(tile);
        return Point{c.x + r * std::cos(a), c.y - r * std::sin(a)};
    };
    auto edge_pos = [&](int tile, int label, double r) {
        double a = kPi / 2 + 2 * kPi * (label + 0.5) / n;
        Point c = center(tile);
        return Point{c.x + r * std::cos(a), c.y - r * std::sin(a)};
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int t = 1; t <= f; ++t) {
        // polygon outline
        svg << "<polygon points=\"";
        for (int i = 0; i < n; ++i) {
            Point p = corner_pos(t, i, kRadius);
            if (i) svg << " ";
            svg << num(p.x) << "," << num(p.y);
        }
        svg << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        Point c = center(t);
        svg << "<text x=\"" << num(c.x) << "\" y=\"" << num(c.y)
            << "\" font-size=\"14\" text-anchor=\"middle\">T" << t << "</text>\n";
        for (int i = 0; i < n; ++i) {
            Point p = corner_pos(t, i, kRadius * 0.85);
            svg << "<text x=\"" << num(p.x) << "\" y=\"" << num(p.y)
                << "\" font-size=\"10\" text-anchor=\"middle\">" << i << "</text>\n";
            Point e = edge_pos(t, i, kRadius * 1.12);
            svg << "<text x=\"" << num(e.x) << "\" y=\"" << num(e.y)
                << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"gray\">" << i
                << "</text>\n";
        }
    }
    // Solid chords are opposing pairs, dashed chords twisted pairs.
    for (const auto& p : d.pairs()) {
        Point a = edge_pos(p.a.tile, p.a.label, kRadius);
        Point b = edge_pos(p.b.tile, p.b.label, kRadius);
        Point ca = center(p.a.tile), cb = center(p.b.tile);
        double mx = (ca.x + cb.x) / 2, my = (ca.y + cb.y) / 2;
        // control point pulled toward the relevant centers
        double qx = (a.x + b.x) / 2 * 0.4 + mx * 0.6;
        double qy = (a.y + b.y) / 2 * 0.4 + my * 0.6;
        svg << "<path d=\"M " << num(a.x) << " " << num(a.y) << " Q " << num(qx) << " "
            << num(qy) << " " << num(b.x) << " " << num(b.y)
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"";
        if (p.sign < 0) svg << " stroke-dasharray=\"5,3\"";
        svg << "/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace tiling

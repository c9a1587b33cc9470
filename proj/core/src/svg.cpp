#include "tropnet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tropnet {

namespace {

constexpr double kScale = 40.0;  // pixels per unit

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

/// Origin-centered viewport wide enough for every coordinate plus a margin.
struct Viewport {
    double half_units;

    double width() const { return 2 * half_units * kScale; }
    double sx(double x) const { return (half_units + x) * kScale; }
    double sy(double y) const { return (half_units - y) * kScale; }
};

Viewport fit(double max_abs) { return Viewport{std::max(max_abs, 1.0) + 2.0}; }

void open_svg(std::ostringstream& out, const Viewport& vp) {
    double w = vp.width();
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\""
        << fmt(w) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(w) << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // light integer grid plus axes through the origin
    out << "  <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (int i = static_cast<int>(-vp.half_units); i <= static_cast<int>(vp.half_units); ++i) {
        out << "    <line x1=\"" << fmt(vp.sx(i)) << "\" y1=\"0\" x2=\"" << fmt(vp.sx(i))
            << "\" y2=\"" << fmt(w) << "\"/>\n";
        out << "    <line x1=\"0\" y1=\"" << fmt(vp.sy(i)) << "\" x2=\"" << fmt(w)
            << "\" y2=\"" << fmt(vp.sy(i)) << "\"/>\n";
    }
    out << "  </g>\n";
    out << "  <g stroke=\"#888888\" stroke-width=\"1\">\n";
    out << "    <line x1=\"" << fmt(vp.sx(0)) << "\" y1=\"0\" x2=\"" << fmt(vp.sx(0))
        << "\" y2=\"" << fmt(w) << "\"/>\n";
    out << "    <line x1=\"0\" y1=\"" << fmt(vp.sy(0)) << "\" x2=\"" << fmt(w) << "\" y2=\""
        << fmt(vp.sy(0)) << "\"/>\n";
    out << "  </g>\n";
}

}  // namespace

std::string render_tropical_svg(const std::vector<LabeledTropLine>& lines,
                                const std::vector<LabeledTropPoint>& points) {
    double max_abs = 0;
    for (const auto& l : lines) {
        max_abs = std::max({max_abs, std::fabs(static_cast<double>(l.line.center.x)),
                            std::fabs(static_cast<double>(l.line.center.y))});
    }
    for (const auto& p : points) {
        max_abs = std::max({max_abs, std::fabs(static_cast<double>(p.point.x)),
                            std::fabs(static_cast<double>(p.point.y))});
    }
    Viewport vp = fit(max_abs);
    std::ostringstream out;
    open_svg(out, vp);
    // three rays per line: west, south, northeast
    for (const auto& l : lines) {
        double cx = vp.sx(l.line.center.x);
        double cy = vp.sy(l.line.center.y);
        double reach = vp.width();
        out << "  <g stroke=\"#2255cc\" stroke-width=\"2\" fill=\"none\">\n";
        out << "    <line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(cy) << "\" x2=\"0\" y2=\""
            << fmt(cy) << "\"/>\n";
        out << "    <line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(cy) << "\" x2=\"" << fmt(cx)
            << "\" y2=\"" << fmt(vp.width()) << "\"/>\n";
        out << "    <line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(cy) << "\" x2=\""
            << fmt(cx + reach) << "\" y2=\"" << fmt(cy - reach) << "\"/>\n";
        out << "  </g>\n";
        if (!l.label.empty()) {
            out << "  <text x=\"" << fmt(cx + 5) << "\" y=\"" << fmt(cy - 5)
                << "\" font-size=\"14\" fill=\"#2255cc\">" << l.label << "</text>\n";
        }
    }
    for (const auto& p : points) {
        double cx = vp.sx(p.point.x);
        double cy = vp.sy(p.point.y);
        out << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
            << "\" r=\"4\" fill=\"#cc3322\"/>\n";
        if (!p.label.empty()) {
            out << "  <text x=\"" << fmt(cx + 6) << "\" y=\"" << fmt(cy + 14)
                << "\" font-size=\"14\" fill=\"#cc3322\">" << p.label << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_amoeba_svg(const std::vector<AmoebaBranchSamples>& branches) {
    double max_abs = 0;
    for (const auto& b : branches) {
        for (const auto& [x, y] : b.samples) {
            max_abs = std::max({max_abs, std::fabs(x), std::fabs(y)});
        }
    }
    Viewport vp = fit(max_abs);
    std::ostringstream out;
    open_svg(out, vp);
    const char* colors[] = {"#2255cc", "#cc3322", "#22aa55"};
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const auto& b = branches[i];
        if (b.samples.empty()) {
            continue;
        }
        out << "  <polyline fill=\"none\" stroke=\"" << colors[i % 3]
            << "\" stroke-width=\"2\" points=\"";
        for (std::size_t s = 0; s < b.samples.size(); ++s) {
            if (s) {
                out << " ";
            }
            out << fmt(vp.sx(b.samples[s].first)) << "," << fmt(vp.sy(b.samples[s].second));
        }
        out << "\"/>\n";
        out << "  <text x=\"" << fmt(vp.sx(b.samples.front().first)) << "\" y=\""
            << fmt(vp.sy(b.samples.front().second) - 8) << "\" font-size=\"14\" fill=\""
            << colors[i % 3] << "\">" << b.name << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string amoeba_csv(const std::vector<AmoebaBranchSamples>& branches) {
    std::ostringstream out;
    for (const auto& b : branches) {
        out << "# " << b.name << "\n";
        char buf[96];
        for (const auto& [x, y] : b.samples) {
            std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", x, y);
            out << buf;
        }
    }
    return out.str();
}

}  // namespace tropnet

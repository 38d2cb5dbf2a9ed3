#pragma once

// Curve emission for the equal-cevian locus: CSV rows or a standalone SVG
// with the triangle, the sampled branches, the asymptote (or the axis +
// circle for isosceles triangles) and the special points E, N, D.

#include <algorithm>
#include <cstdio>

namespace cevia {

namespace detail {

inline std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return buf;
}

struct SvgMap {
    double x0, y0, x1, y1; // world box
    static constexpr double px = 800.0;

    double sx(double x) const { return (x - x0) / (x1 - x0) * px; }
    double sy(double y) const { return (y1 - y) / (y1 - y0) * px; }
};

inline void svg_point(std::ostringstream& os, const SvgMap& m, Point2 p, const char* fill,
                      double r = 2.0) {
    os << "<circle cx=\"" << fmt("%.2f", m.sx(p.x)) << "\" cy=\"" << fmt("%.2f", m.sy(p.y))
       << "\" r=\"" << r << "\" fill=\"" << fill << "\"/>\n";
}

inline void svg_line(std::ostringstream& os, const SvgMap& m, Point2 p, Point2 q,
                     const char* stroke, const char* dash = nullptr) {
    os << "<line x1=\"" << fmt("%.2f", m.sx(p.x)) << "\" y1=\"" << fmt("%.2f", m.sy(p.y))
       << "\" x2=\"" << fmt("%.2f", m.sx(q.x)) << "\" y2=\"" << fmt("%.2f", m.sy(q.y))
       << "\" stroke=\"" << stroke << "\" stroke-width=\"1\"";
    if (dash) os << " stroke-dasharray=\"" << dash << "\"";
    os << "/>\n";
}

inline void svg_label(std::ostringstream& os, const SvgMap& m, Point2 p, const char* text) {
    os << "<text x=\"" << fmt("%.2f", m.sx(p.x) + 5.0) << "\" y=\"" << fmt("%.2f", m.sy(p.y) - 5.0)
       << "\" font-size=\"14\">" << text << "</text>\n";
}

} // namespace detail

inline std::string emit_curve(TriangleAngles ang, double l_min, double l_max, int n,
                              CurveFormat format) {
    const double bound = altitude_bound(ang);
    if (l_min < bound * (1.0 - 1e-12) || l_max < l_min || n < 2)
        throw DomainError("invalid sampling range for the locus curve");

    // geometric progression in l, slightly off the altitude bound
    std::vector<CurveSample> samples;
    const double lo = std::max(l_min, bound * (1.0 + 1e-6));
    const double ratio = std::pow(l_max / lo, 1.0 / (n - 1));
    for (int i = 0; i < n; ++i) {
        const double l = lo * std::pow(ratio, i);
        for (const CurveSample& s : parametric_points(ang, l))
            samples.push_back(s);
    }

    if (format == CurveFormat::Csv) {
        std::ostringstream os;
        os << "l,branch_i,branch_j,x,y\n";
        for (const CurveSample& s : samples)
            os << detail::fmt("%.6g", s.l) << "," << s.branch_i << "," << s.branch_j << ","
               << detail::fmt("%.6g", s.point.x) << "," << detail::fmt("%.6g", s.point.y) << "\n";
        return os.str();
    }

    const TriangleFrame f = make_frame(ang, FrameKind::MedianCentered);
    double x0 = std::min({f.a.x, f.b.x, f.c.x}), x1 = std::max({f.a.x, f.b.x, f.c.x});
    double y0 = std::min({f.a.y, f.b.y, f.c.y}), y1 = std::max({f.a.y, f.b.y, f.c.y});
    for (const CurveSample& s : samples) {
        x0 = std::min(x0, s.point.x);
        x1 = std::max(x1, s.point.x);
        y0 = std::min(y0, s.point.y);
        y1 = std::max(y1, s.point.y);
    }
    x0 = std::max(x0, -3.0) - 0.1;
    x1 = std::min(x1, 3.0) + 0.1;
    y0 = std::max(y0, -3.0) - 0.1;
    y1 = std::min(y1, 3.0) + 0.1;
    // keep the aspect ratio square
    const double span = std::max(x1 - x0, y1 - y0);
    x1 = x0 + span;
    y1 = y0 + span;
    const detail::SvgMap m{x0, y0, x1, y1};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 "
          "800 800\">\n<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    detail::svg_line(os, m, f.a, f.b, "black");
    detail::svg_line(os, m, f.b, f.c, "black");
    detail::svg_line(os, m, f.c, f.a, "black");
    const bool isosceles = std::abs(ang.alpha - ang.beta) <= 1e-12;
    if (isosceles) {
        detail::svg_line(os, m, {0.0, y0}, {0.0, y1}, "green", "4 3");
        const IsoscelesLocus circ = isosceles_locus(ang.alpha);
        os << "<circle cx=\"" << detail::fmt("%.2f", m.sx(circ.center.x)) << "\" cy=\""
           << detail::fmt("%.2f", m.sy(circ.center.y)) << "\" r=\""
           << detail::fmt("%.2f", circ.radius / span * detail::SvgMap::px)
           << "\" fill=\"none\" stroke=\"green\" stroke-dasharray=\"4 3\"/>\n";
    } else {
        const Asymptote as = asymptote(ang);
        detail::svg_line(os, m, {x0, as.slope * x0 + as.intercept},
                         {x1, as.slope * x1 + as.intercept}, "green", "4 3");
    }
    for (const CurveSample& s : samples) {
        if (s.point.x < x0 || s.point.x > x1 || s.point.y < y0 || s.point.y > y1) continue;
        detail::svg_point(os, m, s.point, "blue", 1.5);
    }
    const SpecialPoints sp = special_points(ang);
    for (auto [pt, name] : {std::pair{sp.e, "E"}, {sp.n, "N"}, {sp.d, "D"}}) {
        detail::svg_point(os, m, pt, "red", 3.0);
        detail::svg_label(os, m, pt, name);
    }
    for (auto [pt, name] : {std::pair{f.a, "A"}, {f.b, "B"}, {f.c, "C"}})
        detail::svg_label(os, m, pt, name);
    os << "</svg>\n";
    return os.str();
}

} // namespace cevia

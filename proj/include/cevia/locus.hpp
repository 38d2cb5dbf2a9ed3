#pragma once

// The cubic locus of intersection points of pairs of equal cevians from A and
// B, in the MedianCentered frame (AB = 1): implicit coefficients, asymptote,
// special points, parametric branch sampling by cevian length, and the
// circle + axis degeneration for isosceles triangles.

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cevia/geometry.hpp"

namespace cevia {

/// Bivariate cubic c30 x^3 + c21 x^2 y + c12 x y^2 + c03 y^3 + c20 x^2 +
/// c11 x y + c02 y^2 + c10 x + c01 y + c00.
struct ImplicitCubic {
    double c30, c21, c12, c03, c20, c11, c02, c10, c01, c00;

    double operator()(double x, double y) const {
        return ((c30 * x + c21 * y + c20) * x + (c12 * y + c11) * y + c10) * x +
               ((c03 * y + c02) * y + c01) * y + c00;
    }

    double coeff_scale() const {
        double m = 0.0;
        for (double c : {c30, c21, c12, c03, c20, c11, c02, c10, c01, c00})
            m = std::max(m, std::abs(c));
        return m;
    }
};

inline ImplicitCubic implicit_coeffs(TriangleAngles ang) {
    const double sa = std::sin(ang.alpha), sb = std::sin(ang.beta);
    const double ca = std::cos(ang.alpha), cb = std::cos(ang.beta);
    const double sp = std::sin(ang.beta + ang.alpha), sm = std::sin(ang.beta - ang.alpha);
    return {
        -2.0 * sp * sa * sb,                                       // x^3
        sp * sm,                                                   // x^2 y
        -2.0 * sp * sa * sb,                                       // x y^2
        sp * sm,                                                   // y^3
        -sa * sb * sm,                                             // x^2
        sa * sa * cb * cb + sb * sb * ca * ca - 2.0 * sa * sa * sb * sb, // x y
        sa * sb * sm,                                              // y^2
        0.5 * sa * sb * sp,                                        // x
        0.25 * sm * sp,                                            // y
        0.25 * sa * sb * sm,                                       // 1
    };
}

struct Asymptote {
    double slope;
    double intercept;
};

/// The single asymptote y = k x + b; its slope equals the slope of the
/// median CM. Undefined (vertical) for alpha = beta.
inline Asymptote asymptote(TriangleAngles ang) {
    const double sm = std::sin(ang.beta - ang.alpha);
    if (std::abs(ang.alpha - ang.beta) <= 1e-12)
        throw IsoscelesDegenerate("asymptote is the vertical axis for alpha = beta");
    const double sa = std::sin(ang.alpha), sb = std::sin(ang.beta);
    const double sp = std::sin(ang.beta + ang.alpha);
    return {2.0 * sa * sb / sm,
            -2.0 * sa * sb * sp / (sm * sm + 4.0 * sa * sa * sb * sb)};
}

struct SpecialPoints {
    Point2 e; // third intersection with (AB), the reflection of H through M
    Point2 n; // intersection with the perpendicular bisector of AB, below it
    Point2 d; // node: reflection of C through M
};

inline SpecialPoints special_points(TriangleAngles ang) {
    const TriangleFrame f = make_frame(ang, FrameKind::MedianCentered);
    const double sp = std::sin(ang.beta + ang.alpha), sm = std::sin(ang.beta - ang.alpha);
    return {{-sm / (2.0 * sp), 0.0}, {0.0, -f.c.y}, {-f.c.x, -f.c.y}};
}

struct CurveSample {
    double l;
    int branch_i; // sign choice for the foot of the cevian from B on (AC)
    int branch_j; // sign choice for the foot of the cevian from A on (BC)
    Point2 point;
};

/// Altitudes from A and B with AB = 1: h_a = sin(beta), h_b = sin(alpha).
inline double altitude_bound(TriangleAngles ang) {
    return std::max(std::sin(ang.alpha), std::sin(ang.beta));
}

/// Intersection points of the (up to) four pairs of equal cevians of length l,
/// one from A and one from B, by direct line-line intersection. Parallel
/// branch pairs are skipped.
inline std::vector<CurveSample> parametric_points(TriangleAngles ang, double l) {
    if (l < altitude_bound(ang) * (1.0 - 1e-12))
        throw DomainError("cevian length below the altitude bound");
    const TriangleFrame f = make_frame(ang, FrameKind::MedianCentered);
    const Point2 u_bc = (f.c - f.b) * (1.0 / f.side_bc());
    const Point2 u_ac = (f.c - f.a) * (1.0 / f.side_ca());
    const double ra = l * l - std::sin(ang.beta) * std::sin(ang.beta);   // feet from A on (BC)
    const double rb = l * l - std::sin(ang.alpha) * std::sin(ang.alpha); // feet from B on (AC)
    std::vector<CurveSample> out;
    if (ra < 0.0 || rb < 0.0)
        return out;
    const double sq_a = std::sqrt(std::max(ra, 0.0)), sq_b = std::sqrt(std::max(rb, 0.0));
    for (int i = 0; i < 2; ++i) {
        const double d_b = std::cos(ang.alpha) + (i == 0 ? sq_b : -sq_b);
        const Point2 foot_b = f.a + d_b * u_ac; // foot of the cevian from B
        for (int j = 0; j < 2; ++j) {
            const double d_a = std::cos(ang.beta) + (j == 0 ? sq_a : -sq_a);
            const Point2 foot_a = f.b + d_a * u_bc; // foot of the cevian from A
            try {
                const Point2 p =
                    line_line_intersection(f.a, foot_a - f.a, f.b, foot_b - f.b);
                out.push_back({l, i + 1, j + 1, p});
            } catch (const ParallelCevian&) {
            }
            if (sq_a == 0.0) break; // coincident feet, single branch
        }
        if (sq_b == 0.0) break;
    }
    return out;
}

struct IsoscelesLocus {
    Point2 center;  // (0, -cos(gamma) / (2 sin(gamma)))
    double radius;  // 1 / (2 sin(gamma)) = circumradius of the unit-base triangle
};

/// For base angles alpha = beta the cubic factors into the axis x = 0 and the
/// reflection of the circumcircle across AB.
inline IsoscelesLocus isosceles_locus(double alpha) {
    if (!(alpha > 0.0) || alpha >= kPi / 2.0)
        throw std::domain_error("base angle of an isosceles triangle must be in (0, pi/2)");
    const double g = kPi - 2.0 * alpha;
    return {{0.0, -std::cos(g) / (2.0 * std::sin(g))}, 1.0 / (2.0 * std::sin(g))};
}

enum class CurveFormat { Svg, Csv };

std::string emit_curve(TriangleAngles ang, double l_min, double l_max, int n,
                       CurveFormat format);

} // namespace cevia

#include "cevia/detail/emit_curve.hpp"

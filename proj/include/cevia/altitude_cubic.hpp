#pragma once

// The depressed cubic y^3 + (v-1) y + 2u = 0 (u = ctg(a) ctg(b),
// v = ctg(a)^2 + ctg(b)^2) governing points O = (0, y) on the altitude line
// through which equal cevians from A and B pass, in the AltitudeUnit frame.

#include <algorithm>
#include <cmath>
#include <vector>

#include "cevia/geometry.hpp"

namespace cevia {

struct AltitudeCubic {
    TriangleAngles angles;
    double u; // ctg(alpha) * ctg(beta)
    double v; // ctg(alpha)^2 + ctg(beta)^2

    double p() const { return v - 1.0; } // linear coefficient
    double q() const { return 2.0 * u; } // constant coefficient
    double eval(double y) const { return y * y * y + p() * y + q(); }
    double deriv(double y) const { return 3.0 * y * y + p(); }
};

inline AltitudeCubic build_cubic(TriangleAngles ang) {
    if (std::abs(ang.alpha - ang.beta) <= 1e-9)
        throw IsoscelesDegenerate("the altitude cubic is vacuous for alpha = beta");
    const double ca = 1.0 / std::tan(ang.alpha);
    const double cb = 1.0 / std::tan(ang.beta);
    return {ang, ca * cb, ca * ca + cb * cb};
}

enum class CubicKind { OneReal, TripleWithDouble, ThreeDistinct };

struct RootClassification {
    double discriminant;
    CubicKind kind;
    std::vector<double> roots; // sorted ascending
};

namespace detail {

inline double newton_polish(const AltitudeCubic& c, double y) {
    for (int i = 0; i < 2; ++i) {
        const double d = c.deriv(y);
        if (std::abs(d) < 1e-300) break;
        y -= c.eval(y) / d;
    }
    return y;
}

} // namespace detail

/// Discriminant D = -4 (27 u^2 + (v-1)^3); D > 0 gives three distinct real
/// roots, D < 0 one. Roots via the trigonometric / Cardano closed forms, each
/// polished with a Newton step.
inline RootClassification classify(const AltitudeCubic& c) {
    const double p = c.p(), q = c.q();
    const double disc = -4.0 * (27.0 * c.u * c.u + p * p * p);
    const double scale = std::max({1.0, std::abs(p * p * p), c.u * c.u});
    RootClassification out{disc, CubicKind::OneReal, {}};

    if (std::abs(disc) <= 1e-12 * scale) {
        out.kind = CubicKind::TripleWithDouble;
        if (std::abs(p) < 1e-12 && std::abs(q) < 1e-12) {
            out.roots = {0.0, 0.0, 0.0};
        } else {
            // double root and a simple root of the depressed cubic with D = 0
            const double yd = -3.0 * q / (2.0 * p);
            const double ys = 3.0 * q / p;
            out.roots = {yd, yd, ys};
        }
    } else if (disc > 0.0) {
        out.kind = CubicKind::ThreeDistinct;
        // p < 0 is implied by D > 0; trigonometric form
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            out.roots.push_back(m * std::cos(theta - 2.0 * kPi * k / 3.0));
    } else {
        out.kind = CubicKind::OneReal;
        const double h = q * q / 4.0 + p * p * p / 27.0; // > 0 here
        const double s = std::sqrt(h);
        out.roots = {std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s)};
    }
    for (double& y : out.roots)
        y = detail::newton_polish(c, y);
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

struct GapCheck {
    double formula_gap; // |AA1 - BB1| from the sine-rule closed forms
    double oracle_gap;  // same, from line-intersection construction
};

/// Gap of the cevians through O = (0, y) on the altitude line, computed both
/// by the sine-rule formulas and by the geometric intersection oracle.
inline GapCheck verify_root_geometric(TriangleAngles ang, double y) {
    if (y == 0.0)
        throw std::domain_error("O = H is excluded by the cevian definition");
    const TriangleFrame f = make_frame(ang, FrameKind::AltitudeUnit);
    const double ab = f.side_ab();
    const double bb1 = ab * std::sin(ang.alpha) /
                       std::sin(ang.alpha + std::atan(y * std::tan(ang.beta)));
    const double aa1 = ab * std::sin(ang.beta) /
                       std::sin(ang.beta + std::atan(y * std::tan(ang.alpha)));
    const Point2 o{0.0, y};
    const Cevian ca = cevian_through(f, Vertex::A, o);
    const Cevian cb = cevian_through(f, Vertex::B, o);
    return {std::abs(std::abs(aa1) - std::abs(bb1)), std::abs(ca.length - cb.length)};
}

/// For one obtuse base angle the cubic always has exactly one positive root;
/// return it.
inline double obtuse_existence(TriangleAngles ang) {
    const bool oa = ang.alpha > kPi / 2.0, ob = ang.beta > kPi / 2.0;
    if (oa == ob)
        throw std::domain_error("exactly one of alpha, beta must be obtuse");
    const auto cls = classify(build_cubic(ang));
    for (double y : cls.roots)
        if (y > 0.0)
            return y;
    throw std::logic_error("no positive root found for an obtuse triangle");
}

} // namespace cevia

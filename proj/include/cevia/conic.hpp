#pragma once

// Six equal cevians (two per vertex): feet symmetric about the altitude feet,
// the Carnot product over the six directed ratios, and the common conic
// through the feet via a 5-point nullspace fit.

#include <array>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "cevia/geometry.hpp"

namespace cevia {

struct VertexFoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateConfiguration : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SixFeet {
    TriangleFrame frame;
    double l;
    Point2 a1, a2; // on (BC)
    Point2 b1, b2; // on (CA)
    Point2 c1, c2; // on (AB)
    std::array<bool, 3> coincident; // double-contact flag per vertex (A, B, C)

    std::array<Point2, 6> all() const { return {a1, a2, b1, b2, c1, c2}; }
};

/// Feet of the six cevians of common length l, at distances
/// altitude-foot +- sqrt(l^2 - h^2) along each side's line.
inline SixFeet six_feet(TriangleAngles ang, double l) {
    const TriangleFrame f = make_frame(ang, FrameKind::MedianCentered);
    const double h_a = std::sin(ang.beta);   // altitude from A (AB = 1)
    const double h_b = std::sin(ang.alpha);  // altitude from B
    const double h_c = f.c.y;                // altitude from C
    if (l < std::max({h_a, h_b, h_c}) * (1.0 - 1e-12))
        throw DomainError("cevian length below the largest altitude");

    SixFeet out{f, l, {}, {}, {}, {}, {}, {}, {false, false, false}};
    const struct {
        Vertex v;
        double h;
        Point2* f1;
        Point2* f2;
        bool* flag;
    } rows[3] = {
        {Vertex::A, h_a, &out.a1, &out.a2, &out.coincident[0]},
        {Vertex::B, h_b, &out.b1, &out.b2, &out.coincident[1]},
        {Vertex::C, h_c, &out.c1, &out.c2, &out.coincident[2]},
    };
    for (const auto& r : rows) {
        const Point2 vp = f.vertex(r.v);
        const auto [s0, s1] = f.opposite_side(r.v);
        const Point2 u = (s1 - s0) * (1.0 / distance(s0, s1));
        const Point2 hf = s0 + dot(vp - s0, u) * u; // altitude foot
        double rad = std::max(l * l - r.h * r.h, 0.0);
        if (rad < 1e-14 * l * l) rad = 0.0; // snap roundoff at the tangent length
        const double off = std::sqrt(rad);
        *r.f1 = hf + off * u;
        *r.f2 = hf - off * u;
        *r.flag = off < 1e-8;
        for (const Point2* foot : {r.f1, r.f2})
            if (distance(*foot, s0) < 1e-12 || distance(*foot, s1) < 1e-12)
                throw VertexFoot("cevian foot coincides with a vertex");
    }
    return out;
}

namespace detail {

// signed ratio PX / QX for X on the line (P, Q)
inline double side_ratio(Point2 p, Point2 q, Point2 x) {
    const Point2 u = (q - p) * (1.0 / distance(p, q));
    const double px = dot(x - p, u);
    const double qx = dot(x - q, u);
    if (std::abs(qx) < 1e-13)
        throw ZeroDenominator("foot at a vertex in a Carnot ratio");
    return px / qx;
}

} // namespace detail

/// Carnot product (BA1/CA1 * BA2/CA2)(CB1/AB1 * CB2/AB2)(AC1/BC1 * AC2/BC2)
/// over signed ratios; equals 1 exactly when the six feet lie on one conic.
inline double carnot_product(const SixFeet& s) {
    const Point2 a = s.frame.a, b = s.frame.b, c = s.frame.c;
    return detail::side_ratio(b, c, s.a1) * detail::side_ratio(b, c, s.a2) *
           detail::side_ratio(c, a, s.b1) * detail::side_ratio(c, a, s.b2) *
           detail::side_ratio(a, b, s.c1) * detail::side_ratio(a, b, s.c2);
}

/// General conic q0 x^2 + q1 xy + q2 y^2 + q3 x + q4 y + q5 = 0, normalized
/// to unit max-magnitude coefficient.
struct Conic {
    std::array<double, 6> q;

    double operator()(Point2 p) const {
        return q[0] * p.x * p.x + q[1] * p.x * p.y + q[2] * p.y * p.y + q[3] * p.x +
               q[4] * p.y + q[5];
    }
};

struct ConicFit {
    Conic conic;
    double residual; // normalized value of the conic at the held-out sixth foot
};

namespace detail {

inline Conic normalize(std::array<double, 6> q) {
    double m = 0.0;
    for (double v : q) m = std::max(m, std::abs(v));
    for (double& v : q) v /= m;
    return {q};
}

inline Conic conic_through_five(const std::array<Point2, 5>& pts) {
    Eigen::Matrix<double, 5, 6> design;
    for (int i = 0; i < 5; ++i) {
        const Point2 p = pts[i];
        design.row(i) << p.x * p.x, p.x * p.y, p.y * p.y, p.x, p.y, 1.0;
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 5, 6>> svd(design, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(3) < 1e-10 * sv(0))
        throw DegenerateConfiguration("5-point conic system is rank-deficient");
    const Eigen::Matrix<double, 6, 1> v = svd.matrixV().col(5);
    return normalize({v(0), v(1), v(2), v(3), v(4), v(5)});
}

// circle through three non-collinear points, as a conic
inline Conic circle_through_three(Point2 p, Point2 q, Point2 r) {
    Eigen::Matrix3d m;
    Eigen::Vector3d rhs;
    int i = 0;
    for (Point2 pt : {p, q, r}) {
        m.row(i) << pt.x, pt.y, 1.0;
        rhs(i) = -(pt.x * pt.x + pt.y * pt.y);
        ++i;
    }
    if (std::abs(m.determinant()) < 1e-14)
        throw DegenerateConfiguration("collinear points in circle fallback");
    const Eigen::Vector3d s = m.partialPivLu().solve(rhs);
    return normalize({1.0, 0.0, 1.0, s(0), s(1), s(2)});
}

} // namespace detail

/// Conic through five of the six feet; the residual grades how well the held
/// out sixth foot lies on it. Coincident feet (double contact) fall back to
/// the circle through the three midpoints.
inline ConicFit fit_conic(const SixFeet& s) {
    // collect distinct feet, remembering one held-out duplicate if any
    const auto feet = s.all();
    std::vector<Point2> distinct;
    for (Point2 p : feet) {
        bool dup = false;
        for (Point2 q : distinct)
            if (distance(p, q) < 1e-10) dup = true;
        if (!dup) distinct.push_back(p);
    }

    Conic conic{};
    Point2 held{};
    if (distinct.size() >= 5) {
        conic = detail::conic_through_five(
            {distinct[0], distinct[1], distinct[2], distinct[3], distinct[4]});
        held = distinct.size() > 5 ? distinct[5] : feet[5];
    } else if (distinct.size() == 3) {
        // all three pairs coincident: the midpoint configuration
        conic = detail::circle_through_three(distinct[0], distinct[1], distinct[2]);
        held = distinct[2];
    } else {
        throw DegenerateConfiguration("too few distinct feet for a conic");
    }
    const double scale = std::max(1.0, held.norm_sq());
    return {conic, std::abs(conic(held)) / scale};
}

} // namespace cevia

#pragma once

// Triangle frames, cevian construction by line intersection, and the
// external-bisector cevian. Everything downstream validates its closed
// forms against cevian_through().

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cevia {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kMinAngle = 1e-6; // triangles thinner than this are rejected

struct ParallelCevian : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IsoscelesDegenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
    Point2 operator*(double s) const { return {x * s, y * s}; }
    double norm() const { return std::hypot(x, y); }
    double norm_sq() const { return x * x + y * y; }
};

inline Point2 operator*(double s, Point2 p) { return p * s; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double distance(Point2 a, Point2 b) { return (a - b).norm(); }

/// Angles at A and B in radians; the angle at C is derived.
struct TriangleAngles {
    double alpha;
    double beta;

    TriangleAngles(double a, double b) : alpha(a), beta(b) {
        if (!(a > 0.0) || !(b > 0.0) || !(a + b < kPi))
            throw std::domain_error("invalid triangle angles");
        if (std::min({a, b, gamma()}) < kMinAngle)
            throw std::domain_error("near-degenerate triangle (angle < 1e-6 rad)");
    }

    double gamma() const { return kPi - alpha - beta; }
    TriangleAngles swapped() const { return {beta, alpha}; }
};

enum class FrameKind {
    MedianCentered, // AB = 1 on the x-axis, midpoint M at the origin
    CircumUnit,     // circumradius 1, AB on the x-axis, C on the y-axis
    AltitudeUnit,   // altitude foot H at the origin, C = (0, 1)
};

enum class Vertex { A, B, C };

inline const char* to_string(Vertex v) {
    switch (v) {
    case Vertex::A: return "A";
    case Vertex::B: return "B";
    default: return "C";
    }
}

struct TriangleFrame {
    FrameKind kind;
    TriangleAngles angles;
    Point2 a, b, c;

    Point2 vertex(Vertex v) const {
        switch (v) {
        case Vertex::A: return a;
        case Vertex::B: return b;
        default: return c;
        }
    }

    // Opposite side endpoints in cyclic order: A -> (B, C), B -> (C, A), C -> (A, B).
    // foot_param is 0 at the first endpoint and 1 at the second.
    std::pair<Point2, Point2> opposite_side(Vertex v) const {
        switch (v) {
        case Vertex::A: return {b, c};
        case Vertex::B: return {c, a};
        default: return {a, b};
        }
    }

    double side_ab() const { return distance(a, b); }
    double side_bc() const { return distance(b, c); }
    double side_ca() const { return distance(c, a); }
};

inline TriangleFrame make_frame(TriangleAngles ang, FrameKind kind) {
    const double sa = std::sin(ang.alpha), sb = std::sin(ang.beta);
    const double ca = std::cos(ang.alpha), cb = std::cos(ang.beta);
    const double sab = std::sin(ang.alpha + ang.beta); // = sin(gamma)
    switch (kind) {
    case FrameKind::MedianCentered:
        return {kind, ang, {-0.5, 0.0}, {0.5, 0.0},
                {std::sin(ang.beta - ang.alpha) / (2.0 * sab), sa * sb / sab}};
    case FrameKind::CircumUnit:
        return {kind, ang, {-2.0 * sb * ca, 0.0}, {2.0 * sa * cb, 0.0}, {0.0, 2.0 * sa * sb}};
    default: // AltitudeUnit
        return {kind, ang, {-ca / sa, 0.0}, {cb / sb, 0.0}, {0.0, 1.0}};
    }
}

/// Intersection of the lines p1 + s*d1 and p2 + t*d2. Throws ParallelCevian
/// when the directions are parallel. Also returns the parameter t on the
/// second line via out-param.
inline Point2 line_line_intersection(Point2 p1, Point2 d1, Point2 p2, Point2 d2, double* t_out = nullptr) {
    const double det = cross(d1, d2);
    const double scale = d1.norm() * d2.norm();
    if (std::abs(det) < 1e-14 * std::max(scale, 1e-300))
        throw ParallelCevian("parallel lines");
    const Point2 rhs = p2 - p1;
    const double t = -cross(d1, rhs) / det; // parameter on line 2
    if (t_out) *t_out = t;
    return p2 + t * d2;
}

struct Cevian {
    Vertex vertex;
    Point2 foot;
    double foot_param; // signed position on the opposite side's line, 0 and 1 at its endpoints
    double length;
};

/// Cevian from `vertex` through point p: the line (vertex, p) intersected
/// with the opposite side's line. The foot may lie on the side's extension.
inline Cevian cevian_through(const TriangleFrame& f, Vertex v, Point2 p) {
    const Point2 vp = f.vertex(v);
    const Point2 dir = p - vp;
    if (dir.norm() < 1e-14)
        throw std::invalid_argument("cevian through the vertex itself");
    const auto [s0, s1] = f.opposite_side(v);
    double t = 0.0;
    const Point2 foot = line_line_intersection(vp, dir, s0, s1 - s0, &t);
    return {v, foot, t, distance(vp, foot)};
}

/// External-angle bisector at `vertex`, extended to the opposite side's line.
/// Throws ParallelCevian when the triangle is isosceles at that vertex
/// (the external bisector is then parallel to the opposite side).
inline Cevian external_bisector_cevian(const TriangleFrame& f, Vertex v) {
    const Point2 vp = f.vertex(v);
    const auto [s0, s1] = f.opposite_side(v);
    const Point2 u0 = (s0 - vp) * (1.0 / distance(s0, vp));
    const Point2 u1 = (s1 - vp) * (1.0 / distance(s1, vp));
    const Point2 dir = u0 - u1; // perpendicular to the internal bisector u0 + u1
    double t = 0.0;
    const Point2 foot = line_line_intersection(vp, dir, s0, s1 - s0, &t);
    return {v, foot, t, distance(vp, foot)};
}

} // namespace cevia

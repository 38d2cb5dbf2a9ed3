#pragma once

// Equal-cevian gap oracles: cevians from A and B through a point O constrained
// to the bisector / median / reflected-circumcircle loci, plus k-trisa lengths
// and the f/g range functions behind the k-trisa isosceles criterion.

#include <cmath>
#include <limits>
#include <optional>
#include <utility>

#include "cevia/geometry.hpp"

namespace cevia {

struct DegenerateRatio : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateT : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParallelTrisa : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GapSample {
    double locus_param;
    double gap; // |AA1| - |BB1|
    bool both_exist;
};

namespace detail {

// Gap of the two cevians through O. When O falls on the AB line the cevians
// degenerate to segments inside AB and the gap is |AO| - |BO|.
inline GapSample gap_through(const TriangleFrame& f, Point2 o, double s) {
    if (std::abs(o.y) < 1e-13)
        return {s, distance(f.a, o) - distance(f.b, o), true};
    try {
        const Cevian ca = cevian_through(f, Vertex::A, o);
        const Cevian cb = cevian_through(f, Vertex::B, o);
        return {s, ca.length - cb.length, true};
    } catch (const ParallelCevian&) {
        return {s, std::numeric_limits<double>::quiet_NaN(), false};
    }
}

} // namespace detail

/// Gap of equal-length candidates through the point O = C + s (D - C) on the
/// internal bisector from C (D = bisector foot on AB). s = 0 at C, s = 1 at D.
inline GapSample bisector_gap(TriangleAngles ang, double s) {
    const TriangleFrame f = make_frame(ang, FrameKind::MedianCentered);
    if (!std::isfinite(s))
        return {s, std::numeric_limits<double>::quiet_NaN(), false};
    if (s <= 0.0)
        throw std::domain_error("bisector locus parameter must be positive");
    // AD : DB = CA : CB
    const double w = f.side_ca() / (f.side_ca() + f.side_bc());
    const Point2 d = f.a + w * (f.b - f.a);
    return detail::gap_through(f, f.c + s * (d - f.c), s);
}

/// Same with the median CM as the locus; s = 0 at C, s = 1 at M.
inline GapSample median_gap(TriangleAngles ang, double s) {
    const TriangleFrame f = make_frame(ang, FrameKind::MedianCentered);
    if (!std::isfinite(s)) // the point at infinity of (CM): barycentric (1 : 1 : -2)
        return {s, std::numeric_limits<double>::quiet_NaN(), false};
    if (s <= 0.0)
        throw std::domain_error("median locus parameter must be positive");
    const Point2 m = 0.5 * (f.a + f.b);
    return detail::gap_through(f, f.c + s * (m - f.c), s);
}

/// Residual of the barycentric vector identity behind the median criterion:
///   x (AC^2 - BC^2) + 2 (AC.AB + BC.AB)  ==  2 (MC.AB)(x + 2).
/// Always an algebraic identity; the return value is numerical noise.
inline double median_identity_residual(TriangleAngles ang, double x) {
    if (std::abs(x + 1.0) < 1e-12 || std::abs(x) < 1e-12)
        throw std::domain_error("barycentric weights x = -1 and x = 0 are excluded");
    const TriangleFrame f = make_frame(ang, FrameKind::MedianCentered);
    const Point2 ab = f.b - f.a, ac = f.c - f.a, bc = f.c - f.b;
    const Point2 m = 0.5 * (f.a + f.b);
    const double lhs = x * (ac.norm_sq() - bc.norm_sq()) + 2.0 * (dot(ac, ab) + dot(bc, ab));
    const double rhs = 2.0 * dot(f.c - m, ab) * (x + 2.0);
    return std::abs(lhs - rhs);
}

/// Gap |AA1| - |BB1| for feet dividing BC and AC in the same ratio p : q
/// (BA1 : A1C = AB1 : B1C = p : q). Zero exactly when alpha = beta.
inline double ratio_cevian_gap(TriangleAngles ang, double p, double q) {
    if (std::abs(2.0 * q + p) < 1e-12)
        throw DegenerateRatio("2q + p = 0");
    if (std::abs(p + q) < 1e-12)
        throw DegenerateRatio("p + q = 0 puts the feet at infinity");
    const TriangleFrame f = make_frame(ang, FrameKind::MedianCentered);
    const Point2 a1 = (1.0 / (p + q)) * (q * f.b + p * f.c);
    const Point2 b1 = (1.0 / (p + q)) * (q * f.a + p * f.c);
    return distance(f.a, a1) - distance(f.b, b1);
}

/// Point of the reflected circumcircle S_ABC in the CircumUnit frame:
///   x = sin t + (c1 + c2)/2,  y = cos t - cos(gamma).
inline Point2 circle_S_point(TriangleAngles ang, double t) {
    const TriangleFrame f = make_frame(ang, FrameKind::CircumUnit);
    const double cx = 0.5 * (f.a.x + f.b.x);
    return {std::sin(t) + cx, std::cos(t) - std::cos(ang.gamma())};
}

/// Closed-form squared cevian lengths (AA1^2, BB1^2) through the circle point
/// at parameter t. Throws DegenerateT at T = A, T = B, and at the reflection
/// of C through the midpoint of AB (vanishing denominator).
inline std::pair<double, double> circle_cevian_lengths_sq(TriangleAngles ang, double t) {
    const TriangleFrame f = make_frame(ang, FrameKind::CircumUnit);
    const double den = std::cos(0.5 * (t + ang.alpha - ang.beta));
    if (std::abs(den) < 1e-9)
        throw DegenerateT("T at the reflection of C through the midpoint of AB");
    const Point2 tp = circle_S_point(ang, t);
    if (distance(tp, f.a) < 1e-9 || distance(tp, f.b) < 1e-9)
        throw DegenerateT("T at a vertex");
    const double sg = std::sin(ang.gamma());
    const double num_a = 2.0 * std::sin(ang.beta) * sg;
    const double num_b = 2.0 * std::sin(ang.alpha) * sg;
    return {num_a * num_a / (den * den), num_b * num_b / (den * den)};
}

/// Length of the k-trisa from A (or B) with AB = 1, via the law of sines:
/// sin(beta) / sin(k alpha + beta) for A, symmetric for B.
inline double trisa_cevian_length(TriangleAngles ang, double k, Vertex v) {
    double num, den;
    if (v == Vertex::A) {
        num = std::sin(ang.beta);
        den = std::sin(k * ang.alpha + ang.beta);
    } else if (v == Vertex::B) {
        num = std::sin(ang.alpha);
        den = std::sin(k * ang.beta + ang.alpha);
    } else {
        throw std::invalid_argument("trisa lengths are defined for vertices A and B");
    }
    if (std::abs(den) < 1e-12)
        throw ParallelTrisa("trisa parallel to the opposite side");
    return num / den;
}

/// The two range functions of the k-trisa criterion, gamma_param = 2/k:
///   f(t) = sin((g+1) t) / sin t,   g(tau) = -sin((g-1) tau) / sin tau,
/// on 0 < tau <= t <= pi/g. f > -1 and g < -1 in the open domain, both -1 at
/// the right endpoint.
inline std::pair<double, double> trisa_fg(double gamma_param, double t, double tau) {
    if (gamma_param < 2.0)
        throw std::domain_error("gamma_param must be >= 2 (i.e. 0 < k <= 1)");
    const double bound = kPi / gamma_param;
    if (!(0.0 < tau && tau <= t && t <= bound + 1e-15))
        throw std::domain_error("need 0 < tau <= t <= pi/gamma_param");
    const double fv = std::sin((gamma_param + 1.0) * t) / std::sin(t);
    const double gv = -std::sin((gamma_param - 1.0) * tau) / std::sin(tau);
    return {fv, gv};
}

/// Scalene witness search for k > 1: for fixed alpha, find beta != alpha with
/// equal k-trisa lengths. Roots of F(b) = sin(b) sin(k b + a) - sin(a) sin(k a + b).
inline std::optional<double> find_trisa_witness(double k, double alpha) {
    const auto F = [&](double b) {
        return std::sin(b) * std::sin(k * b + alpha) - std::sin(alpha) * std::sin(k * alpha + b);
    };
    const double lo = kMinAngle * 10.0, hi = kPi - alpha - kMinAngle * 10.0;
    const int n = 4000;
    double prev_b = lo, prev_f = F(lo);
    for (int i = 1; i <= n; ++i) {
        const double b = lo + (hi - lo) * i / n;
        const double fb = F(b);
        const bool straddles_alpha = prev_b <= alpha && alpha <= b;
        if (!straddles_alpha && prev_f * fb < 0.0) {
            double x0 = prev_b, x1 = b, f0 = prev_f;
            while (x1 - x0 > 1e-12) {
                const double mid = 0.5 * (x0 + x1), fm = F(mid);
                if (f0 * fm <= 0.0)
                    x1 = mid;
                else {
                    x0 = mid;
                    f0 = fm;
                }
            }
            const double beta = 0.5 * (x0 + x1);
            if (std::abs(beta - alpha) > 1e-6) {
                // accept only if both trisa lengths are genuinely equal and positive
                try {
                    TriangleAngles w(alpha, beta);
                    const double la = trisa_cevian_length(w, k, Vertex::A);
                    const double lb = trisa_cevian_length(w, k, Vertex::B);
                    if (la > 0.0 && lb > 0.0 && std::abs(la - lb) < 1e-9)
                        return beta;
                } catch (const std::exception&) {
                }
            }
        }
        prev_b = b;
        prev_f = fb;
    }
    return std::nullopt;
}

} // namespace cevia

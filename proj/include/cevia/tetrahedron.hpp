#pragma once

// Trihedral-angle bisectors of a tetrahedron: squared lengths from face areas
// and edges, an independent coordinate-geometry construction of the bisector
// ray, the equal-bisector nonlinear system over the apex edges, and the
// equifacial verdict.

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "cevia/geometry.hpp"

namespace cevia {

struct DegenerateFace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Six edge lengths of tetrahedron ABCD. The base face is ABC; (ad, bd, cd)
/// are the apex edges, the unknowns of the equal-bisector system.
struct TetraEdgeSet {
    double ab, ac, bc;
    double ad, bd, cd;
};

namespace tet_detail {

inline double heron(double a, double b, double c) {
    if (a + b <= c || b + c <= a || c + a <= b)
        throw DegenerateFace("triangle inequality violated");
    const double s = 0.5 * (a + b + c);
    return std::sqrt(s * (s - a) * (s - b) * (s - c));
}

} // namespace tet_detail

struct FaceAreas {
    double abc, abd, acd, bcd;
};

inline FaceAreas face_areas(const TetraEdgeSet& e) {
    return {tet_detail::heron(e.ab, e.ac, e.bc), tet_detail::heron(e.ab, e.ad, e.bd),
            tet_detail::heron(e.ac, e.ad, e.cd), tet_detail::heron(e.bc, e.bd, e.cd)};
}

/// 288 V^2 via the Cayley-Menger determinant; positive for a nondegenerate
/// tetrahedron.
inline double cayley_menger(const TetraEdgeSet& e) {
    Eigen::Matrix<double, 5, 5> m;
    const double ab = e.ab * e.ab, ac = e.ac * e.ac, ad = e.ad * e.ad;
    const double bc = e.bc * e.bc, bd = e.bd * e.bd, cd = e.cd * e.cd;
    m << 0, 1, 1, 1, 1,
         1, 0, ab, ac, ad,
         1, ab, 0, bc, bd,
         1, ac, bc, 0, cd,
         1, ad, bd, cd, 0;
    return m.determinant();
}

inline bool is_valid_tetrahedron(const TetraEdgeSet& e) {
    try {
        face_areas(e);
    } catch (const DegenerateFace&) {
        return false;
    }
    return cayley_menger(e) > 0.0;
}

struct BisectorSquares {
    double al1, bl2, cl3, dl4;

    std::array<double, 4> all() const { return {al1, bl2, cl3, dl4}; }
};

namespace tet_detail {

// |P - sum w_i Q_i|^2 with normalized weights, from edge lengths only:
//   W * sum w_i PQ_i^2 - sum_{i<j} w_i w_j Q_iQ_j^2, all over W^2.
inline double weighted_point_dist_sq(const std::array<double, 3>& pq,
                                     const std::array<double, 3>& qq, // (q1q2, q1q3, q2q3)
                                     const std::array<double, 3>& w) {
    const double W = w[0] + w[1] + w[2];
    const double lin = w[0] * pq[0] * pq[0] + w[1] * pq[1] * pq[1] + w[2] * pq[2] * pq[2];
    const double pair = w[0] * w[1] * qq[0] * qq[0] + w[0] * w[2] * qq[1] * qq[1] +
                        w[1] * w[2] * qq[2] * qq[2];
    return (W * lin - pair) / (W * W);
}

} // namespace tet_detail

/// Squared bisector lengths. The bisector from a vertex meets the opposite
/// face at the point weighted by the areas of the three faces through that
/// vertex (the face through the vertex missing Q_i is the weight of Q_i).
inline BisectorSquares bisector_squares(const TetraEdgeSet& e) {
    const FaceAreas s = face_areas(e);
    using tet_detail::weighted_point_dist_sq;
    return {
        // A -> (B, C, D): weights (S_ACD, S_ABD, S_ABC)
        weighted_point_dist_sq({e.ab, e.ac, e.ad}, {e.bc, e.bd, e.cd}, {s.acd, s.abd, s.abc}),
        // B -> (A, C, D): weights (S_BCD, S_ABD, S_ABC)
        weighted_point_dist_sq({e.ab, e.bc, e.bd}, {e.ac, e.ad, e.cd}, {s.bcd, s.abd, s.abc}),
        // C -> (A, B, D): weights (S_BCD, S_ACD, S_ABC)
        weighted_point_dist_sq({e.ac, e.bc, e.cd}, {e.ab, e.ad, e.bd}, {s.bcd, s.acd, s.abc}),
        // D -> (A, B, C): weights (S_BCD, S_ACD, S_ABD)
        weighted_point_dist_sq({e.ad, e.bd, e.cd}, {e.ab, e.ac, e.bc}, {s.bcd, s.acd, s.abd}),
    };
}

/// Coordinates A, B, C, D realizing the edge set (A at the origin, B on the
/// x-axis, C in the z = 0 plane, D above it).
inline std::array<Eigen::Vector3d, 4> embed(const TetraEdgeSet& e) {
    const Eigen::Vector3d a(0, 0, 0), b(e.ab, 0, 0);
    const double xc = (e.ab * e.ab + e.ac * e.ac - e.bc * e.bc) / (2.0 * e.ab);
    const double yc2 = e.ac * e.ac - xc * xc;
    if (yc2 <= 0.0) throw DegenerateFace("degenerate base face");
    const Eigen::Vector3d c(xc, std::sqrt(yc2), 0);
    const double xd = (e.ab * e.ab + e.ad * e.ad - e.bd * e.bd) / (2.0 * e.ab);
    const double yd =
        (e.ad * e.ad - e.cd * e.cd - 2.0 * xd * c.x() + c.x() * c.x() + c.y() * c.y()) /
        (2.0 * c.y());
    const double zd2 = e.ad * e.ad - xd * xd - yd * yd;
    if (zd2 <= 0.0) throw DegenerateFace("edge set is not realizable as a tetrahedron");
    return {a, b, c, Eigen::Vector3d(xd, yd, std::sqrt(zd2))};
}

/// Independent construction of the bisector length from `vertex` (0..3 for
/// A..D): embed the tetrahedron, take the ray whose distance to the three
/// faces through the vertex grows equally, and intersect it with the opposite
/// face's plane.
inline double bisector_length_geometric(const TetraEdgeSet& e, int vertex) {
    const auto pts = embed(e);
    const Eigen::Vector3d p = pts[vertex];
    std::array<Eigen::Vector3d, 3> others;
    for (int i = 0, j = 0; i < 4; ++i)
        if (i != vertex) others[j++] = pts[i];
    const Eigen::Vector3d centroid = (others[0] + others[1] + others[2]) / 3.0;

    // inward unit normals of the three faces through p
    Eigen::Matrix3d normals;
    for (int i = 0; i < 3; ++i) {
        const Eigen::Vector3d& q1 = others[(i + 1) % 3];
        const Eigen::Vector3d& q2 = others[(i + 2) % 3];
        Eigen::Vector3d n = (q1 - p).cross(q2 - p).normalized();
        if (n.dot(others[i] - p) < 0.0) n = -n;
        normals.row(i) = n;
    }
    const Eigen::Vector3d dir = normals.partialPivLu().solve(Eigen::Vector3d::Ones());

    const Eigen::Vector3d face_n = (others[1] - others[0]).cross(others[2] - others[0]);
    const double denom = dir.dot(face_n);
    if (std::abs(denom) < 1e-14)
        throw DegenerateFace("bisector ray parallel to the opposite face");
    const double t = (others[0] - p).dot(face_n) / denom;
    return (t * dir).norm();
}

/// The tetrahedron with opposite edges pairwise equal built from an acute
/// triangle with sides (a, b, c): base (ab, ac, bc) = (c, b, a) gets apex
/// edges (ad, bd, cd) = (a, b, c). All four faces are congruent.
inline TetraEdgeSet equifacial_tetrahedron(double a, double b, double c) {
    return {c, b, a, a, b, c};
}

struct EquifacialVerdict {
    bool equal_areas;
    bool opposite_edges_equal;
    double max_area_spread; // relative
};

inline EquifacialVerdict equifacial_check(const TetraEdgeSet& e, double tol = 1e-9) {
    const FaceAreas s = face_areas(e);
    const double mx = std::max({s.abc, s.abd, s.acd, s.bcd});
    const double mn = std::min({s.abc, s.abd, s.acd, s.bcd});
    const double spread = (mx - mn) / mx;
    const double emax = std::max({e.ab, e.ac, e.bc, e.ad, e.bd, e.cd});
    const bool opp = std::abs(e.ab - e.cd) < tol * emax && std::abs(e.ac - e.bd) < tol * emax &&
                     std::abs(e.ad - e.bc) < tol * emax;
    return {spread < tol, opp, spread};
}

struct EqualBisectorSolution {
    TetraEdgeSet edges;
    double residual;        // max |AL1^2 - XL^2| over the three equations
    double oracle_residual; // max relative gap of Eq-vs-geometric bisector lengths
    FaceAreas areas;
    EquifacialVerdict verdict;
};

namespace tet_detail {

inline Eigen::Vector3d residuals(const TetraEdgeSet& e) {
    const BisectorSquares b = bisector_squares(e);
    return {b.al1 - b.bl2, b.al1 - b.cl3, b.al1 - b.dl4};
}

inline bool feasible(const TetraEdgeSet& e) {
    if (e.ad <= 0.0 || e.bd <= 0.0 || e.cd <= 0.0) return false;
    return is_valid_tetrahedron(e);
}

} // namespace tet_detail

/// Damped Newton with multistart on the system AL1 = BL2 = CL3 = DL4 (squared
/// lengths) over the apex edges (ad, bd, cd). The base face is fixed by its
/// angles and the circumdiameter d: bc = d sin(A), ab = d sin(C), ac = d sin(B).
/// The equifacial construction seeds the first start.
inline std::vector<EqualBisectorSolution> solve_equal_bisectors(
    const std::array<double, 3>& base_angles, double d, int starts, unsigned seed = 42) {
    if (d <= 0.0) throw std::domain_error("circumdiameter must be positive");
    if (std::abs(base_angles[0] + base_angles[1] + base_angles[2] - kPi) > 1e-9)
        throw std::domain_error("base angles must sum to pi");
    const double ab = d * std::sin(base_angles[2]);
    const double ac = d * std::sin(base_angles[1]);
    const double bc = d * std::sin(base_angles[0]);
    const double m = std::max({ab, ac, bc});

    const auto make = [&](double x, double y, double z) {
        return TetraEdgeSet{ab, ac, bc, x, y, z};
    };

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> box(0.2 * m, 3.0 * m);
    std::vector<Eigen::Vector3d> start_pts;
    start_pts.emplace_back(bc, ac, ab); // equifacial seed
    while (static_cast<int>(start_pts.size()) < starts) {
        const Eigen::Vector3d s(box(rng), box(rng), box(rng));
        if (tet_detail::feasible(make(s(0), s(1), s(2)))) start_pts.push_back(s);
    }

    const double scale = m * m;
    std::vector<EqualBisectorSolution> out;
    for (const Eigen::Vector3d& s0 : start_pts) {
        Eigen::Vector3d x = s0;
        if (!tet_detail::feasible(make(x(0), x(1), x(2)))) continue;
        Eigen::Vector3d r = tet_detail::residuals(make(x(0), x(1), x(2)));
        bool converged = false;
        for (int it = 0; it < 80; ++it) {
            if (r.norm() < 1e-12 * scale) {
                converged = true;
                break;
            }
            // finite-difference Jacobian
            Eigen::Matrix3d jac;
            const double h = 1e-7 * m;
            for (int j = 0; j < 3; ++j) {
                Eigen::Vector3d xp = x;
                xp(j) += h;
                const TetraEdgeSet ep = make(xp(0), xp(1), xp(2));
                if (!tet_detail::feasible(ep)) {
                    xp(j) -= 2.0 * h;
                }
                jac.col(j) =
                    (tet_detail::residuals(make(xp(0), xp(1), xp(2))) - r) / (xp(j) - x(j));
            }
            const Eigen::Vector3d step = jac.partialPivLu().solve(-r);
            if (!step.allFinite()) break;
            // halve steps that leave the feasible set or grow the residual
            double lambda = 1.0;
            bool moved = false;
            for (int half = 0; half < 30; ++half, lambda *= 0.5) {
                const Eigen::Vector3d xn = x + lambda * step;
                const TetraEdgeSet en = make(xn(0), xn(1), xn(2));
                if (!tet_detail::feasible(en)) continue;
                const Eigen::Vector3d rn = tet_detail::residuals(en);
                if (rn.norm() < r.norm() || half == 29) {
                    x = xn;
                    r = rn;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }
        if (!converged) continue;

        const TetraEdgeSet e = make(x(0), x(1), x(2));
        bool dup = false;
        for (const EqualBisectorSolution& prev : out)
            if (std::abs(prev.edges.ad - e.ad) < 1e-6 * m &&
                std::abs(prev.edges.bd - e.bd) < 1e-6 * m &&
                std::abs(prev.edges.cd - e.cd) < 1e-6 * m)
                dup = true;
        if (dup) continue;

        const BisectorSquares bs = bisector_squares(e);
        double oracle = 0.0;
        for (int v = 0; v < 4; ++v) {
            const double geo = bisector_length_geometric(e, v);
            oracle = std::max(oracle,
                              std::abs(std::sqrt(bs.all()[v]) - geo) / std::max(geo, 1e-12));
        }
        out.push_back({e, r.cwiseAbs().maxCoeff(), oracle, face_areas(e),
                       equifacial_check(e, 1e-6)});
    }
    return out;
}

} // namespace cevia

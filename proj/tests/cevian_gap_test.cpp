#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cevia/gaps.hpp"

using namespace cevia;

namespace {

double deg(double d) { return d * kPi / 180.0; }

TriangleAngles random_angles(std::mt19937& rng, double min_angle = 0.05) {
    std::uniform_real_distribution<double> u(min_angle, kPi - 2.0 * min_angle);
    for (;;) {
        const double a = u(rng), b = u(rng);
        if (a + b < kPi - min_angle) return {a, b};
    }
}

// gap sign never flips across the open locus (endpoints excluded by 1e-4)
template <typename GapFn>
bool constant_sign(GapFn&& gap_fn, int samples = 1000) {
    int sign = 0;
    for (int i = 0; i < samples; ++i) {
        const double s = 1e-4 + (1.0 - 2e-4) * i / (samples - 1);
        const GapSample g = gap_fn(s);
        if (!g.both_exist) continue;
        if (std::abs(g.gap) < 1e-14) continue;
        const int cur = g.gap > 0.0 ? 1 : -1;
        if (sign != 0 && cur != sign) return false;
        sign = cur;
    }
    return true;
}

} // namespace

TEST_CASE("bisector gap vanishes for isosceles triangles") {
    const TriangleAngles ang(deg(55), deg(55));
    for (double s : {0.1, 0.35, 0.5, 0.9}) {
        const GapSample g = bisector_gap(ang, s);
        REQUIRE(g.both_exist);
        CHECK(std::abs(g.gap) < 1e-12);
    }
}

TEST_CASE("bisector gap keeps one sign on scalene triangles") {
    const TriangleAngles ang(deg(50), deg(70));
    CHECK(constant_sign([&](double s) { return bisector_gap(ang, s); }));

    std::mt19937 rng(23);
    for (int i = 0; i < 50; ++i) {
        const TriangleAngles r = random_angles(rng);
        if (std::abs(r.alpha - r.beta) < 1e-3) continue;
        CHECK(constant_sign([&](double s) { return bisector_gap(r, s); }, 200));
    }
}

TEST_CASE("bisector gap at s = 1 compares the base segments at the foot") {
    const TriangleAngles ang(deg(50), deg(70));
    const auto f = make_frame(ang, FrameKind::MedianCentered);
    const double w = f.side_ca() / (f.side_ca() + f.side_bc());
    const Point2 d = f.a + w * (f.b - f.a);
    const GapSample g = bisector_gap(ang, 1.0);
    REQUIRE(g.both_exist);
    CHECK(g.gap == doctest::Approx(distance(f.a, d) - distance(f.b, d)).epsilon(1e-12));
    CHECK(std::abs(g.gap) > 1e-3); // scalene: |AD| != |BD|
}

TEST_CASE("median gap: symmetry, sign constancy, point at infinity") {
    const TriangleAngles iso(deg(40), deg(40));
    for (double s : {0.2, 0.5, 0.8})
        CHECK(std::abs(median_gap(iso, s).gap) < 1e-12);

    const TriangleAngles ang(deg(30), deg(80));
    CHECK(constant_sign([&](double s) { return median_gap(ang, s); }));

    // barycentric (1 : 1 : -2) is the point at infinity of (CM)
    const GapSample inf = median_gap(ang, std::numeric_limits<double>::infinity());
    CHECK_FALSE(inf.both_exist);
}

TEST_CASE("median identity is algebraic") {
    CHECK(median_identity_residual({deg(60), deg(60)}, 5.0) < 1e-10);

    // at x = -2 both sides vanish individually
    const TriangleAngles ang(deg(30), deg(80));
    const auto f = make_frame(ang, FrameKind::MedianCentered);
    const Point2 ab = f.b - f.a, ac = f.c - f.a, bc = f.c - f.b;
    const double x = -2.0;
    const double lhs = x * (ac.norm_sq() - bc.norm_sq()) + 2.0 * (dot(ac, ab) + dot(bc, ab));
    const double rhs = 2.0 * dot(f.c - 0.5 * (f.a + f.b), ab) * (x + 2.0);
    CHECK(std::abs(lhs) < 1e-12);
    CHECK(std::abs(rhs) < 1e-12);
    CHECK(median_identity_residual(ang, x) < 1e-10);

    std::mt19937 rng(29);
    std::uniform_real_distribution<double> ux(-5.0, 5.0);
    for (int i = 0; i < 500; ++i) {
        const TriangleAngles r = random_angles(rng);
        const double xv = ux(rng);
        if (std::abs(xv) < 1e-3 || std::abs(xv + 1.0) < 1e-3) continue;
        CHECK(median_identity_residual(r, xv) < 1e-10);
    }

    CHECK_THROWS_AS(median_identity_residual(ang, -1.0), std::domain_error);
    CHECK_THROWS_AS(median_identity_residual(ang, 0.0), std::domain_error);
}

TEST_CASE("ratio cevians") {
    // medians of a scalene triangle differ
    CHECK(std::abs(ratio_cevian_gap({deg(40), deg(75)}, 1.0, 1.0)) > 1e-3);
    // symmetry
    for (auto [p, q] : {std::pair{1.0, 1.0}, {2.0, 3.0}, {5.0, -1.0}})
        CHECK(std::abs(ratio_cevian_gap({deg(40), deg(40)}, p, q)) < 1e-12);
    CHECK_THROWS_AS(ratio_cevian_gap({deg(40), deg(75)}, 2.0, -1.0), DegenerateRatio);

    // sign matches the direct length computation
    const TriangleAngles ang(deg(40), deg(75));
    const auto f = make_frame(ang, FrameKind::MedianCentered);
    const double p = 2.0, q = 3.0;
    const Point2 a1 = (1.0 / (p + q)) * (q * f.b + p * f.c);
    const Point2 b1 = (1.0 / (p + q)) * (q * f.a + p * f.c);
    const double direct = distance(f.a, a1) - distance(f.b, b1);
    CHECK(ratio_cevian_gap(ang, p, q) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("circle_S_point lies on the reflected circumcircle") {
    std::mt19937 rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        const TriangleAngles ang = random_angles(rng);
        const auto f = make_frame(ang, FrameKind::CircumUnit);
        const Point2 center{0.5 * (f.a.x + f.b.x), -std::cos(ang.gamma())};
        for (int i = 0; i < 360; ++i) {
            const double t = 2.0 * kPi * i / 360.0;
            CHECK(std::abs(distance(circle_S_point(ang, t), center) - 1.0) < 1e-12);
        }
    }
    // cos t = cos gamma puts the point on the (AB) line
    const TriangleAngles ang(deg(40), deg(60));
    CHECK(std::abs(circle_S_point(ang, ang.gamma()).y) < 1e-15);
    // isosceles: circle center on the axis
    const auto fi = make_frame({deg(50), deg(50)}, FrameKind::CircumUnit);
    CHECK(std::abs(0.5 * (fi.a.x + fi.b.x)) < 1e-15);
}

TEST_CASE("closed-form circle cevian lengths match the intersection oracle") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> ut(0.0, 2.0 * kPi);
    int checked = 0;
    while (checked < 200) {
        const TriangleAngles ang = random_angles(rng);
        const double t = ut(rng);
        try {
            const auto [aa_sq, bb_sq] = circle_cevian_lengths_sq(ang, t);
            const auto f = make_frame(ang, FrameKind::CircumUnit);
            const Point2 tp = circle_S_point(ang, t);
            const Cevian ca = cevian_through(f, Vertex::A, tp);
            const Cevian cb = cevian_through(f, Vertex::B, tp);
            CHECK(aa_sq == doctest::Approx(ca.length * ca.length).epsilon(1e-9));
            CHECK(bb_sq == doctest::Approx(cb.length * cb.length).epsilon(1e-9));
            ++checked;
        } catch (const DegenerateT&) {
        } catch (const ParallelCevian&) {
        }
    }
}

TEST_CASE("circle cevians are equal only for isosceles triangles") {
    // formula ratio: AA1^2 / BB1^2 = sin^2(beta) / sin^2(alpha)
    const TriangleAngles ang(deg(40), deg(60));
    const auto [aa_sq, bb_sq] = circle_cevian_lengths_sq(ang, 1.0);
    const double want = std::pow(std::sin(ang.beta) / std::sin(ang.alpha), 2);
    CHECK(aa_sq / bb_sq == doctest::Approx(want).epsilon(1e-12));

    const auto [ia, ib] = circle_cevian_lengths_sq({deg(50), deg(50)}, 2.0);
    CHECK(ia == doctest::Approx(ib));

    std::mt19937 rng(41);
    std::uniform_real_distribution<double> ut(0.0, 2.0 * kPi);
    for (int i = 0; i < 200; ++i) {
        const TriangleAngles r = random_angles(rng);
        if (std::abs(r.alpha - r.beta) < 1e-3) continue;
        try {
            const auto [sa, sb] = circle_cevian_lengths_sq(r, ut(rng));
            CHECK(std::abs(sa - sb) > 1e-12);
        } catch (const DegenerateT&) {
        }
    }
}

TEST_CASE("degenerate circle parameters are rejected") {
    const TriangleAngles ang(deg(40), deg(60));
    // vanishing denominator: t = pi + beta - alpha (reflection of C through the midpoint)
    CHECK_THROWS_AS(circle_cevian_lengths_sq(ang, kPi + ang.beta - ang.alpha), DegenerateT);
    // T = B at t = gamma, T = A at t = 2 pi - gamma
    CHECK_THROWS_AS(circle_cevian_lengths_sq(ang, ang.gamma()), DegenerateT);
    CHECK_THROWS_AS(circle_cevian_lengths_sq(ang, 2.0 * kPi - ang.gamma()), DegenerateT);
}

TEST_CASE("trisa lengths") {
    // the 1-trisa from A is the side AC
    const TriangleAngles ang(deg(40), deg(60));
    CHECK(trisa_cevian_length(ang, 1.0, Vertex::A) ==
          doctest::Approx(std::sin(ang.beta) / std::sin(ang.alpha + ang.beta)));
    // right triangle: both 2-trisas equal AB
    const TriangleAngles right(deg(35), deg(55));
    CHECK(trisa_cevian_length(right, 2.0, Vertex::A) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(trisa_cevian_length(right, 2.0, Vertex::B) == doctest::Approx(1.0).epsilon(1e-12));
    // bisectors of an isosceles triangle
    const TriangleAngles iso(deg(50), deg(50));
    CHECK(trisa_cevian_length(iso, 0.5, Vertex::A) ==
          doctest::Approx(trisa_cevian_length(iso, 0.5, Vertex::B)));
    // parallel case: k alpha + beta = pi
    const TriangleAngles par(deg(40), deg(60));
    const double k_par = (kPi - par.beta) / par.alpha;
    CHECK_THROWS_AS(trisa_cevian_length(par, k_par, Vertex::A), ParallelTrisa);
}

TEST_CASE("trisa length matches the intersection oracle for 0 < k < 1") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> uk(0.05, 0.95);
    for (int i = 0; i < 200; ++i) {
        const TriangleAngles ang = random_angles(rng);
        const double k = uk(rng);
        const auto f = make_frame(ang, FrameKind::MedianCentered);
        // ray from A at oriented angle k*alpha from AB
        const double theta = k * ang.alpha;
        const Point2 dir{std::cos(theta), std::sin(theta)};
        try {
            const Cevian c = cevian_through(f, Vertex::A, f.a + dir);
            CHECK(trisa_cevian_length(ang, k, Vertex::A) ==
                  doctest::Approx(c.length).epsilon(1e-9));
        } catch (const ParallelCevian&) {
        } catch (const ParallelTrisa&) {
        }
    }
}

TEST_CASE("f and g ranges are separated by -1") {
    for (double g : {2.0, 3.0, 4.0, 10.0}) {
        const double bound = kPi / g;
        double min_f = 1e300, max_g = -1e300;
        for (int i = 1; i < 200; ++i) {
            const double t = bound * i / 200.0;
            for (int j = 1; j <= i; ++j) {
                const double tau = bound * j / 200.0;
                const auto [fv, gv] = trisa_fg(g, t, tau);
                if (i < 200) min_f = std::min(min_f, fv);
                max_g = std::max(max_g, gv);
            }
        }
        CHECK(min_f > -1.0);
        if (g == 2.0)
            CHECK(max_g == -1.0); // g is identically -1; separation is f > -1 = g
        else
            CHECK(max_g < -1.0);
        const auto [fb, gb] = trisa_fg(g, bound, bound);
        CHECK(std::abs(fb + 1.0) < 1e-10);
        CHECK(std::abs(gb + 1.0) < 1e-10);
    }
    // small-angle limit: f -> gamma_param + 1
    const auto [f0, g0] = trisa_fg(4.0, 1e-7, 1e-8);
    CHECK(f0 == doctest::Approx(5.0).epsilon(1e-6));
    (void)g0;
    CHECK_THROWS_AS(trisa_fg(1.5, 0.1, 0.05), std::domain_error);
    CHECK_THROWS_AS(trisa_fg(3.0, 0.05, 0.1), std::domain_error);
}

TEST_CASE("scalene witnesses with equal k-trisas exist for k > 1") {
    for (double k : {1.5, 2.0, 3.0}) {
        const double alpha = deg(20);
        const auto beta = find_trisa_witness(k, alpha);
        REQUIRE(beta.has_value());
        const TriangleAngles w(alpha, *beta);
        const double la = trisa_cevian_length(w, k, Vertex::A);
        const double lb = trisa_cevian_length(w, k, Vertex::B);
        CHECK(std::abs(la - lb) < 1e-9);
        CHECK(std::abs(w.alpha - w.beta) > 1e-3);
        if (k == 2.0) // only right triangles admit equal 2-trisas
            CHECK(std::abs(w.gamma() - kPi / 2.0) < 1e-6);
    }
}

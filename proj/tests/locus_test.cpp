#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cevia/locus.hpp"

using namespace cevia;

namespace {

double deg(double d) { return d * kPi / 180.0; }

// closed-form intersection of the (i, j) branch pair, used as a cross-check
// of the direct line-intersection path
Point2 branch_closed_form(TriangleAngles ang, double d_b, double d_a) {
    const double sa = std::sin(ang.alpha), sb = std::sin(ang.beta);
    const double ca = std::cos(ang.alpha);
    const double den = d_b * d_a * std::sin(ang.alpha + ang.beta) - d_a * sb - d_b * sa;
    return {(-d_a * d_b * sb * ca + d_a * sb) / den + 0.5, (-d_a * d_b * sa * sb) / den};
}

double normalized_eval(const ImplicitCubic& c, Point2 p) {
    const double scale = c.coeff_scale() * std::max(1.0, p.norm() * p.norm_sq());
    return std::abs(c(p.x, p.y)) / scale;
}

TriangleAngles random_angles(std::mt19937& rng, double min_angle = 0.05) {
    std::uniform_real_distribution<double> u(min_angle, kPi - 2.0 * min_angle);
    for (;;) {
        const double a = u(rng), b = u(rng);
        if (a + b < kPi - min_angle) return {a, b};
    }
}

} // namespace

TEST_CASE("implicit cubic vanishes at the known points") {
    const TriangleAngles ang(deg(20), deg(40));
    const ImplicitCubic c = implicit_coeffs(ang);
    const TriangleFrame f = make_frame(ang, FrameKind::MedianCentered);
    const SpecialPoints sp = special_points(ang);
    for (Point2 p : {f.a, f.b, sp.e, sp.n, sp.d})
        CHECK(normalized_eval(c, p) < 1e-10);
}

TEST_CASE("restriction to the AB line has roots -1/2, 1/2 and x_E") {
    std::mt19937 rng(67);
    for (int i = 0; i < 50; ++i) {
        const TriangleAngles ang = random_angles(rng);
        const ImplicitCubic c = implicit_coeffs(ang);
        const double xe = -std::sin(ang.beta - ang.alpha) / (2.0 * std::sin(ang.beta + ang.alpha));
        for (double x : {-0.5, 0.5, xe})
            CHECK(std::abs(c(x, 0.0)) < 1e-12 * c.coeff_scale());
        // and no other roots: compare against the factored cubic
        const double lead = -2.0 * std::sin(ang.beta + ang.alpha) * std::sin(ang.alpha) *
                            std::sin(ang.beta);
        for (double x : {-2.0, -0.7, 0.3, 1.5}) {
            const double want = lead * (x - 0.5) * (x + 0.5) * (x - xe);
            CHECK(c(x, 0.0) == doctest::Approx(want).epsilon(1e-10));
        }
    }
}

TEST_CASE("restriction to the axis has the single real root y_N") {
    std::mt19937 rng(71);
    for (int i = 0; i < 50; ++i) {
        const TriangleAngles ang = random_angles(rng);
        if (std::abs(ang.alpha - ang.beta) < 1e-3) continue;
        const ImplicitCubic c = implicit_coeffs(ang);
        const SpecialPoints sp = special_points(ang);
        CHECK(std::abs(c(0.0, sp.n.y)) < 1e-12 * c.coeff_scale());
        // the cofactor y^2 + 1/4 never vanishes: no other real roots
        for (double y = -3.0; y <= 3.0; y += 0.01)
            if (std::abs(y - sp.n.y) > 1e-3)
                CHECK(std::abs(c(0.0, y)) > 1e-12 * c.coeff_scale());
    }
}

TEST_CASE("swapping the angles mirrors the zero set") {
    std::mt19937 rng(73);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        const TriangleAngles ang = random_angles(rng);
        const ImplicitCubic c1 = implicit_coeffs(ang);
        const ImplicitCubic c2 = implicit_coeffs(ang.swapped());
        const double x = u(rng), y = u(rng);
        CHECK(c2(-x, y) == doctest::Approx(-c1(x, y)).epsilon(1e-10));
    }
}

TEST_CASE("asymptote") {
    // slope simplification for 20/40: 2 sin20 sin40 / sin20 = 2 sin40
    const Asymptote as = asymptote({deg(20), deg(40)});
    CHECK(as.slope == doctest::Approx(2.0 * std::sin(deg(40))));

    // slope equals the slope of the median CM
    std::mt19937 rng(79);
    for (int i = 0; i < 100; ++i) {
        const TriangleAngles ang = random_angles(rng);
        if (std::abs(ang.alpha - ang.beta) < 1e-3) continue;
        const TriangleFrame f = make_frame(ang, FrameKind::MedianCentered);
        CHECK(asymptote(ang).slope == doctest::Approx(f.c.y / f.c.x).epsilon(1e-10));
    }

    CHECK_THROWS_AS(asymptote({deg(50), deg(50)}), IsoscelesDegenerate);

    // obtuse triangle: finite asymptote, samples approach it
    const TriangleAngles ob(deg(40), deg(120));
    const Asymptote ao = asymptote(ob);
    double prev = 1e300;
    for (double l : {5.0, 20.0, 100.0}) {
        double worst = 0.0;
        for (const CurveSample& s : parametric_points(ob, l)) {
            if (s.point.norm() < 3.0) continue; // only the unbounded branch
            const double dist = std::abs(s.point.y - ao.slope * s.point.x - ao.intercept) /
                                std::hypot(1.0, ao.slope);
            worst = std::max(worst, dist);
        }
        if (worst > 0.0) {
            CHECK(worst < prev);
            prev = worst;
        }
    }
}

TEST_CASE("special points") {
    // isosceles: E = M and D = N
    const SpecialPoints iso = special_points({deg(50), deg(50)});
    CHECK(iso.e.x == 0.0);
    CHECK(distance(iso.d, iso.n) < 1e-15);

    // E is the reflection of the altitude foot H through M
    std::mt19937 rng(83);
    for (int i = 0; i < 100; ++i) {
        const TriangleAngles ang = random_angles(rng);
        const TriangleFrame f = make_frame(ang, FrameKind::MedianCentered);
        const SpecialPoints sp = special_points(ang);
        CHECK(sp.e.x == doctest::Approx(-f.c.x).epsilon(1e-12));
        CHECK(std::abs(sp.n.y) == doctest::Approx(f.c.y).epsilon(1e-12)); // |MN| = CH
        CHECK(distance(sp.d, Point2{-f.c.x, -f.c.y}) < 1e-15);
    }
}

TEST_CASE("parametric samples satisfy the implicit equation") {
    const TriangleAngles ang(deg(20), deg(40));
    const ImplicitCubic c = implicit_coeffs(ang);
    const auto samples = parametric_points(ang, 1.2);
    CHECK(samples.size() == 4);
    for (const CurveSample& s : samples)
        CHECK(normalized_eval(c, s.point) < 1e-8);
    CHECK_THROWS_AS(parametric_points(ang, 0.3), DomainError);
}

TEST_CASE("direct intersection matches the closed-form branch formula") {
    std::mt19937 rng(89);
    std::uniform_real_distribution<double> ul(1.0, 10.0);
    int n = 0;
    while (n < 200) {
        const TriangleAngles ang = random_angles(rng);
        const double l = std::max(ul(rng), altitude_bound(ang) * 1.01);
        for (const CurveSample& s : parametric_points(ang, l)) {
            const double sq_b = std::sqrt(l * l - std::pow(std::sin(ang.alpha), 2));
            const double sq_a = std::sqrt(l * l - std::pow(std::sin(ang.beta), 2));
            const double d_b = std::cos(ang.alpha) + (s.branch_i == 1 ? sq_b : -sq_b);
            const double d_a = std::cos(ang.beta) + (s.branch_j == 1 ? sq_a : -sq_a);
            const Point2 p = branch_closed_form(ang, d_b, d_a);
            CHECK(distance(p, s.point) < 1e-9 * std::max(1.0, s.point.norm()));
            ++n;
        }
    }
}

TEST_CASE("equilateral altitude length gives the single centroid sample") {
    const TriangleAngles eq(deg(60), deg(60));
    const auto samples = parametric_points(eq, std::sqrt(3.0) / 2.0);
    REQUIRE(samples.size() == 1);
    const TriangleFrame f = make_frame(eq, FrameKind::MedianCentered);
    const Point2 centroid = (1.0 / 3.0) * (f.a + f.b + f.c);
    CHECK(distance(samples[0].point, centroid) < 1e-12);
}

TEST_CASE("the four branches converge to the node D in the mean") {
    for (auto [a, b] : {std::pair{20.0, 40.0}, {40.0, 120.0}}) {
        const TriangleAngles ang(deg(a), deg(b));
        const SpecialPoints sp = special_points(ang);
        const auto samples = parametric_points(ang, 1e3);
        REQUIRE(samples.size() == 4);
        Point2 mean{0.0, 0.0};
        for (const CurveSample& s : samples) mean = mean + 0.25 * s.point;
        CHECK(distance(mean, sp.d) < 1e-4);
    }
}

TEST_CASE("isosceles locus is the reflected circumcircle plus the axis") {
    // equilateral numbers
    const IsoscelesLocus eq = isosceles_locus(deg(60));
    CHECK(eq.center.x == 0.0);
    CHECK(eq.center.y == doctest::Approx(-1.0 / (2.0 * std::sqrt(3.0))));
    CHECK(eq.radius == doctest::Approx(1.0 / std::sqrt(3.0)));

    for (double ad : {30.0, 50.0, 60.0, 75.0}) {
        const double alpha = deg(ad);
        const IsoscelesLocus loc = isosceles_locus(alpha);
        const TriangleAngles ang(alpha, alpha);

        // the axis point N lies on the circle
        const SpecialPoints sp = special_points(ang);
        CHECK(distance(sp.n, loc.center) == doctest::Approx(loc.radius).epsilon(1e-12));

        // center is the reflection of the circumcenter across AB
        const TriangleFrame f = make_frame(ang, FrameKind::MedianCentered);
        const double ab = f.side_ab();
        const double r = ab / (2.0 * std::sin(ang.gamma()));
        const double yc = f.c.y - std::sqrt(std::max(r * r - f.c.x * f.c.x, 0.0));
        CHECK(loc.center.y == doctest::Approx(-yc).epsilon(1e-10));
        CHECK(loc.radius == doctest::Approx(r).epsilon(1e-12));

        // sampled circle points satisfy the (isosceles) implicit cubic
        const ImplicitCubic c = implicit_coeffs(ang);
        for (int i = 0; i < 100; ++i) {
            const double t = 2.0 * kPi * i / 100.0;
            const Point2 p = loc.center + Point2{loc.radius * std::cos(t),
                                                 loc.radius * std::sin(t)};
            CHECK(normalized_eval(c, p) < 1e-10);
        }
    }
    CHECK_THROWS_AS(isosceles_locus(deg(90)), std::domain_error);
}

TEST_CASE("curve emission") {
    const TriangleAngles ang(deg(20), deg(40));
    const std::string csv = emit_curve(ang, 0.7, 5.0, 50, CurveFormat::Csv);
    CHECK(csv.rfind("l,branch_i,branch_j,x,y\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') > 50);

    const std::string svg = emit_curve(ang, 0.7, 5.0, 50, CurveFormat::Svg);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);

    const std::string iso_svg =
        emit_curve({deg(50), deg(50)}, 0.8, 5.0, 50, CurveFormat::Svg);
    CHECK(iso_svg.find("circle") != std::string::npos);

    CHECK_THROWS_AS(emit_curve(ang, 0.1, 5.0, 50, CurveFormat::Csv), DomainError);
}

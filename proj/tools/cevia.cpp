// cevia: equal-cevian triangle loci, the altitude cubic, k-trisas, the
// six-cevian conic and tetrahedron trihedral-bisector experiments from one
// command line. Degrees at the boundary, radians inside; json output uses
// 12 significant digits and is deterministic for a fixed argv + seed.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cevia/altitude_cubic.hpp"
#include "cevia/conic.hpp"
#include "cevia/gaps.hpp"
#include "cevia/locus.hpp"
#include "cevia/tetrahedron.hpp"

using json = nlohmann::ordered_json;
using namespace cevia;

namespace {

double deg2rad(double d) { return d * kPi / 180.0; }

// round to 12 significant digits so json output is stable across platforms
json num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return json::parse(buf);
}

json point_json(Point2 p) { return json{num(p.x), num(p.y)}; }

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

// ---------------------------------------------------------------------------
// verify suites: each returns true on success, printing nothing by itself

TriangleAngles random_angles(std::mt19937& rng, double min_angle = 0.05) {
    std::uniform_real_distribution<double> u(min_angle, kPi - 2.0 * min_angle);
    for (;;) {
        const double a = u(rng), b = u(rng);
        if (a + b < kPi - min_angle) return {a, b};
    }
}

template <typename GapFn>
bool constant_sign(GapFn&& gap_fn, int samples) {
    int sign = 0;
    for (int i = 0; i < samples; ++i) {
        const double s = 1e-4 + (1.0 - 2e-4) * i / (samples - 1);
        const GapSample g = gap_fn(s);
        if (!g.both_exist || std::abs(g.gap) < 1e-14) continue;
        const int cur = g.gap > 0.0 ? 1 : -1;
        if (sign != 0 && cur != sign) return false;
        sign = cur;
    }
    return true;
}

bool suite_gaps(unsigned seed) {
    std::mt19937 rng(seed);
    for (int i = 0; i < 50; ++i) {
        const TriangleAngles ang = random_angles(rng);
        if (std::abs(ang.alpha - ang.beta) <= 0.01) continue;
        if (!constant_sign([&](double s) { return bisector_gap(ang, s); }, 300)) return false;
        if (!constant_sign([&](double s) { return median_gap(ang, s); }, 300)) return false;
    }
    std::uniform_real_distribution<double> ua(0.1, kPi / 2.0 - 0.05);
    for (int i = 0; i < 20; ++i) {
        const double a = ua(rng);
        for (double s : {0.2, 0.5, 0.9}) {
            if (std::abs(bisector_gap({a, a}, s).gap) > 1e-10) return false;
            if (std::abs(median_gap({a, a}, s).gap) > 1e-10) return false;
        }
    }
    return true;
}

bool suite_circle(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> ut(0.0, 2.0 * kPi);
    int checked = 0;
    while (checked < 100) {
        const TriangleAngles ang = random_angles(rng);
        const double t = ut(rng);
        try {
            const auto [aa_sq, bb_sq] = circle_cevian_lengths_sq(ang, t);
            const auto f = make_frame(ang, FrameKind::CircumUnit);
            const Point2 tp = circle_S_point(ang, t);
            const Cevian ca = cevian_through(f, Vertex::A, tp);
            const Cevian cb = cevian_through(f, Vertex::B, tp);
            if (std::abs(aa_sq - ca.length * ca.length) > 1e-9 * std::max(1.0, aa_sq))
                return false;
            if (std::abs(bb_sq - cb.length * cb.length) > 1e-9 * std::max(1.0, bb_sq))
                return false;
            if (std::abs(ang.alpha - ang.beta) > 1e-3 && std::abs(aa_sq - bb_sq) < 1e-14)
                return false;
            ++checked;
        } catch (const DegenerateT&) {
        } catch (const ParallelCevian&) {
        }
    }
    return true;
}

bool suite_altitude(unsigned) {
    const auto c90 = classify(build_cubic({deg2rad(90), deg2rad(60)}));
    const double r = std::sqrt(2.0 / 3.0);
    bool seen_pos = false, seen_neg = false;
    for (double y : c90.roots) {
        if (std::abs(y - r) < 1e-12) seen_pos = true;
        if (std::abs(y + r) < 1e-12) seen_neg = true;
    }
    if (!seen_pos || !seen_neg) return false;

    const AltitudeCubic c85 = build_cubic({deg2rad(85), deg2rad(60)});
    int in_unit = 0;
    for (double y : classify(c85).roots)
        if (y > 0.0 && y < 1.0) {
            const GapCheck g = verify_root_geometric(c85.angles, y);
            if (g.formula_gap > 1e-8 || g.oracle_gap > 1e-8) return false;
            ++in_unit;
        }
    return in_unit >= 2;
}

bool suite_trisa(unsigned seed) {
    std::mt19937 rng(seed);
    for (double g : {2.0, 3.0, 4.0, 10.0}) {
        const double bound = kPi / g;
        std::uniform_real_distribution<double> ub(1e-6 * bound, bound * (1.0 - 1e-9));
        for (int i = 0; i < 2000; ++i) {
            double t = ub(rng), tau = ub(rng);
            if (tau > t) std::swap(t, tau);
            const auto [fv, gv] = trisa_fg(g, t, tau);
            if (!(fv > -1.0)) return false;
            if (g == 2.0 ? gv != -1.0 : !(gv < -1.0)) return false;
        }
        const auto [fb, gb] = trisa_fg(g, bound, bound);
        if (std::abs(fb + 1.0) > 1e-10 || std::abs(gb + 1.0) > 1e-10) return false;
    }
    for (double a : {25.0, 40.0, 65.0}) {
        const TriangleAngles right(deg2rad(a), deg2rad(90.0 - a));
        if (std::abs(trisa_cevian_length(right, 2.0, Vertex::A) - 1.0) > 1e-10) return false;
        if (std::abs(trisa_cevian_length(right, 2.0, Vertex::B) - 1.0) > 1e-10) return false;
    }
    for (double k : {1.5, 2.0, 3.0})
        if (!find_trisa_witness(k, deg2rad(20)).has_value()) return false;
    return true;
}

bool suite_conic(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> ul(1.0, 2.5);
    int n = 0;
    while (n < 100) {
        const TriangleAngles ang = random_angles(rng, 0.1);
        const double h = std::max({std::sin(ang.alpha), std::sin(ang.beta),
                                   make_frame(ang, FrameKind::MedianCentered).c.y});
        try {
            const SixFeet s = six_feet(ang, h * ul(rng));
            if (std::abs(carnot_product(s) - 1.0) > 1e-10) return false;
            if (fit_conic(s).residual > 1e-8) return false;
            ++n;
        } catch (const VertexFoot&) {
        } catch (const DegenerateConfiguration&) {
        }
    }
    return true;
}

bool suite_locus(unsigned seed) {
    for (auto [ad, bd] : {std::pair{20.0, 40.0}, {40.0, 120.0}}) {
        const TriangleAngles ang(deg2rad(ad), deg2rad(bd));
        const ImplicitCubic c = implicit_coeffs(ang);
        const TriangleFrame f = make_frame(ang, FrameKind::MedianCentered);
        const SpecialPoints sp = special_points(ang);
        for (Point2 p : {f.a, f.b, sp.e, sp.n})
            if (std::abs(c(p.x, p.y)) > 1e-10 * c.coeff_scale()) return false;
        if (std::abs(asymptote(ang).slope - f.c.y / f.c.x) >
            1e-10 * std::abs(f.c.y / f.c.x))
            return false;
        double l = altitude_bound(ang) * 1.02;
        for (int i = 0; i < 40; ++i, l *= 1.1)
            for (const CurveSample& s : parametric_points(ang, l)) {
                const double scale =
                    c.coeff_scale() * std::max(1.0, s.point.norm() * s.point.norm_sq());
                if (std::abs(c(s.point.x, s.point.y)) > 1e-8 * scale) return false;
            }
    }
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> ua(0.15, kPi / 2.0 - 0.05);
    for (int i = 0; i < 5; ++i) {
        const double a = ua(rng);
        const IsoscelesLocus loc = isosceles_locus(a);
        const ImplicitCubic c = implicit_coeffs({a, a});
        for (int j = 0; j < 36; ++j) {
            const double t = 2.0 * kPi * j / 36.0;
            const Point2 p = loc.center +
                             Point2{loc.radius * std::cos(t), loc.radius * std::sin(t)};
            const double scale = c.coeff_scale() * std::max(1.0, p.norm() * p.norm_sq());
            if (std::abs(c(p.x, p.y)) > 1e-10 * scale) return false;
        }
    }
    return true;
}

bool suite_tetra(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int n = 0;
    while (n < 30) {
        std::array<Eigen::Vector3d, 4> p;
        for (auto& q : p) q = Eigen::Vector3d(u(rng), u(rng), u(rng));
        if (std::abs((p[1] - p[0]).cross(p[2] - p[0]).dot(p[3] - p[0])) < 0.1) continue;
        const TetraEdgeSet e{(p[0] - p[1]).norm(), (p[0] - p[2]).norm(),
                             (p[1] - p[2]).norm(), (p[0] - p[3]).norm(),
                             (p[1] - p[3]).norm(), (p[2] - p[3]).norm()};
        const BisectorSquares b = bisector_squares(e);
        for (int v = 0; v < 4; ++v) {
            const double geo = bisector_length_geometric(e, v);
            if (std::abs(std::sqrt(b.all()[v]) - geo) > 1e-8 * std::max(1.0, geo))
                return false;
        }
        ++n;
    }
    const std::array<double, 3> base{deg2rad(45), deg2rad(60), deg2rad(75)};
    const auto sols = solve_equal_bisectors(base, 1.0, 20, seed);
    for (const EqualBisectorSolution& s : sols)
        if (s.verdict.equal_areas) return true;
    return false;
}

// ---------------------------------------------------------------------------

int run_altitude(double alpha_deg, double beta_deg, bool as_json) {
    const TriangleAngles ang(deg2rad(alpha_deg), deg2rad(beta_deg));
    const AltitudeCubic c = build_cubic(ang);
    const auto cls = classify(c);
    const char* kind = cls.kind == CubicKind::OneReal          ? "one_real"
                       : cls.kind == CubicKind::TripleWithDouble ? "with_double_root"
                                                                 : "three_distinct";
    json roots = json::array();
    json gaps = json::array();
    for (double y : cls.roots) {
        if (std::abs(y) < 1e-12) continue; // O = H is excluded
        roots.push_back(num(y));
        const GapCheck g = verify_root_geometric(ang, y);
        gaps.push_back({{"root", num(y)},
                        {"formula_gap", num(g.formula_gap)},
                        {"oracle_gap", num(g.oracle_gap)}});
    }
    if (as_json) {
        json out{{"alpha_deg", num(alpha_deg)}, {"beta_deg", num(beta_deg)},
                 {"u", num(c.u)},               {"v", num(c.v)},
                 {"discriminant", num(cls.discriminant)},
                 {"classification", kind},      {"roots", roots},
                 {"root_gaps", gaps}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("u = %.12g  v = %.12g  D = %.12g  (%s)\n", c.u, c.v, cls.discriminant,
                    kind);
        for (const auto& g : gaps)
            std::printf("root y = %.12g  formula gap %.3g  oracle gap %.3g\n",
                        g["root"].get<double>(), g["formula_gap"].get<double>(),
                        g["oracle_gap"].get<double>());
    }
    return 0;
}

int run_trisa(double alpha_deg, double beta_deg, double k, bool witness, bool as_json) {
    const TriangleAngles ang(deg2rad(alpha_deg), deg2rad(beta_deg));
    const double la = trisa_cevian_length(ang, k, Vertex::A);
    const double lb = trisa_cevian_length(ang, k, Vertex::B);
    json out{{"alpha_deg", num(alpha_deg)},
             {"beta_deg", num(beta_deg)},
             {"k", num(k)},
             {"length_from_a", num(la)},
             {"length_from_b", num(lb)},
             {"gap", num(la - lb)}};
    if (witness) {
        const auto b = find_trisa_witness(k, deg2rad(alpha_deg));
        out["witness_beta_deg"] = b ? num(*b * 180.0 / kPi) : json();
    }
    if (as_json)
        std::cout << out.dump(2) << "\n";
    else {
        std::printf("k-trisa lengths (AB = 1): from A %.12g, from B %.12g, gap %.3g\n", la,
                    lb, la - lb);
        if (witness) {
            if (out["witness_beta_deg"].is_null())
                std::printf("no scalene witness found for this alpha\n");
            else
                std::printf("scalene witness: beta = %.12g deg\n",
                            out["witness_beta_deg"].get<double>());
        }
    }
    return 0;
}

int run_locus(double alpha_deg, double beta_deg, double lmin, double lmax, int samples,
              const std::string& format, const std::string& out_path) {
    const TriangleAngles ang(deg2rad(alpha_deg), deg2rad(beta_deg));
    if (lmin <= 0.0) lmin = altitude_bound(ang) * 1.01;
    if (format == "csv" || format == "svg") {
        const std::string text = emit_curve(
            ang, lmin, lmax, samples, format == "csv" ? CurveFormat::Csv : CurveFormat::Svg);
        write_output(text, out_path);
        return 0;
    }
    // json: coefficients, special points, asymptote (or circle), samples
    const ImplicitCubic c = implicit_coeffs(ang);
    const SpecialPoints sp = special_points(ang);
    json out{{"alpha_deg", num(alpha_deg)},
             {"beta_deg", num(beta_deg)},
             {"coefficients",
              {{"c30", num(c.c30)}, {"c21", num(c.c21)}, {"c12", num(c.c12)},
               {"c03", num(c.c03)}, {"c20", num(c.c20)}, {"c11", num(c.c11)},
               {"c02", num(c.c02)}, {"c10", num(c.c10)}, {"c01", num(c.c01)},
               {"c00", num(c.c00)}}},
             {"special_points",
              {{"e", point_json(sp.e)}, {"n", point_json(sp.n)}, {"d", point_json(sp.d)}}}};
    if (std::abs(alpha_deg - beta_deg) < 1e-9) {
        const IsoscelesLocus loc = isosceles_locus(deg2rad(alpha_deg));
        out["circle"] = {{"center", point_json(loc.center)}, {"radius", num(loc.radius)}};
    } else {
        const Asymptote as = asymptote(ang);
        out["asymptote"] = {{"slope", num(as.slope)}, {"intercept", num(as.intercept)}};
    }
    json rows = json::array();
    const double lo = std::max(lmin, altitude_bound(ang) * (1.0 + 1e-6));
    const double ratio = std::pow(lmax / lo, 1.0 / std::max(1, samples - 1));
    for (int i = 0; i < samples; ++i) {
        const double l = lo * std::pow(ratio, i);
        for (const CurveSample& s : parametric_points(ang, l))
            rows.push_back({{"l", num(s.l)},
                            {"branch_i", s.branch_i},
                            {"branch_j", s.branch_j},
                            {"point", point_json(s.point)}});
    }
    out["samples"] = rows;
    write_output(out.dump(2) + "\n", out_path);
    return 0;
}

int run_conic(double alpha_deg, double beta_deg, double l, bool as_json,
              const std::string& svg_path) {
    const TriangleAngles ang(deg2rad(alpha_deg), deg2rad(beta_deg));
    const SixFeet s = six_feet(ang, l);
    const double carnot = carnot_product(s);
    const ConicFit fit = fit_conic(s);
    const double disc = fit.conic.q[1] * fit.conic.q[1] - 4.0 * fit.conic.q[0] * fit.conic.q[2];

    if (!svg_path.empty()) {
        const TriangleFrame& f = s.frame;
        double x0 = -1.5, x1 = 1.5, y0 = -1.5, y1 = 1.5;
        for (Point2 p : s.all()) {
            x0 = std::min(x0, p.x - 0.2);
            x1 = std::max(x1, p.x + 0.2);
            y0 = std::min(y0, p.y - 0.2);
            y1 = std::max(y1, p.y + 0.2);
        }
        const double span = std::max(x1 - x0, y1 - y0);
        x1 = x0 + span;
        y1 = y0 + span;
        const detail::SvgMap m{x0, y0, x1, y1};
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
              "viewBox=\"0 0 800 800\">\n<rect width=\"800\" height=\"800\" "
              "fill=\"white\"/>\n";
        detail::svg_line(os, m, f.a, f.b, "black");
        detail::svg_line(os, m, f.b, f.c, "black");
        detail::svg_line(os, m, f.c, f.a, "black");
        // sample the conic by solving the quadratic in y per x column
        const auto& q = fit.conic.q;
        for (int i = 0; i <= 2000; ++i) {
            const double x = x0 + (x1 - x0) * i / 2000.0;
            const double A = q[2], B = q[1] * x + q[4], C = (q[0] * x + q[3]) * x + q[5];
            if (std::abs(A) < 1e-14) continue;
            const double d = B * B - 4.0 * A * C;
            if (d < 0.0) continue;
            for (double sgn : {1.0, -1.0}) {
                const double y = (-B + sgn * std::sqrt(d)) / (2.0 * A);
                if (y >= y0 && y <= y1) detail::svg_point(os, m, {x, y}, "purple", 1.0);
            }
        }
        for (Point2 p : s.all()) detail::svg_point(os, m, p, "blue", 3.0);
        for (auto [pt, name] : {std::pair{f.a, "A"}, {f.b, "B"}, {f.c, "C"}})
            detail::svg_label(os, m, pt, name);
        os << "</svg>\n";
        write_output(os.str(), svg_path);
    }

    json feet{{"a1", point_json(s.a1)}, {"a2", point_json(s.a2)},
              {"b1", point_json(s.b1)}, {"b2", point_json(s.b2)},
              {"c1", point_json(s.c1)}, {"c2", point_json(s.c2)}};
    json coeffs = json::array();
    for (double v : fit.conic.q) coeffs.push_back(num(v));
    if (as_json) {
        json out{{"alpha_deg", num(alpha_deg)},
                 {"beta_deg", num(beta_deg)},
                 {"l", num(l)},
                 {"feet", feet},
                 {"carnot_product", num(carnot)},
                 {"conic", coeffs},
                 {"residual", num(fit.residual)},
                 {"conic_type_hint", disc < 0.0 ? "ellipse" : "hyperbola"}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("carnot product = %.12g\nconic:", carnot);
        for (double v : fit.conic.q) std::printf(" %.12g", v);
        std::printf("\nresidual = %.3g  (discriminant sign hints %s)\n", fit.residual,
                    disc < 0.0 ? "ellipse" : "hyperbola");
    }
    return 0;
}

int run_tetra(const std::string& base_csv, double diameter, int starts, unsigned seed,
              bool as_json) {
    std::array<double, 3> base{};
    {
        std::istringstream is(base_csv);
        std::string tok;
        int i = 0;
        while (std::getline(is, tok, ',') && i < 3) base[i++] = deg2rad(std::stod(tok));
        if (i != 3) throw CLI::ValidationError("--base-angles-deg", "need three angles A,B,C");
    }
    const auto sols = solve_equal_bisectors(base, diameter, starts, seed);
    json rows = json::array();
    for (const EqualBisectorSolution& s : sols) {
        rows.push_back(
            {{"edges",
              {{"ab", num(s.edges.ab)}, {"ac", num(s.edges.ac)}, {"bc", num(s.edges.bc)},
               {"ad", num(s.edges.ad)}, {"bd", num(s.edges.bd)}, {"cd", num(s.edges.cd)}}},
             {"residual", num(s.residual)},
             {"oracle_residual", num(s.oracle_residual)},
             {"face_areas",
              {{"abc", num(s.areas.abc)}, {"abd", num(s.areas.abd)},
               {"acd", num(s.areas.acd)}, {"bcd", num(s.areas.bcd)}}},
             {"equifacial",
              {{"equal_areas", s.verdict.equal_areas},
               {"opposite_edges_equal", s.verdict.opposite_edges_equal},
               {"max_area_spread", num(s.verdict.max_area_spread)}}}});
    }
    if (as_json) {
        std::cout << json{{"base_angles_deg", base_csv},
                          {"diameter", num(diameter)},
                          {"starts", starts},
                          {"solutions", rows}}
                         .dump(2)
                  << "\n";
    } else {
        std::printf("%zu solution(s)\n", sols.size());
        for (const EqualBisectorSolution& s : sols)
            std::printf("ad=%.9g bd=%.9g cd=%.9g  residual %.2g  oracle %.2g  equifacial %s\n",
                        s.edges.ad, s.edges.bd, s.edges.cd, s.residual, s.oracle_residual,
                        s.verdict.equal_areas ? "yes" : "no");
    }
    return 0;
}

int run_verify(const std::string& suite, unsigned seed) {
    const std::vector<std::pair<std::string, bool (*)(unsigned)>> suites{
        {"gaps", suite_gaps},     {"circle", suite_circle}, {"altitude", suite_altitude},
        {"trisa", suite_trisa},   {"conic", suite_conic},   {"locus", suite_locus},
        {"tetra", suite_tetra},
    };
    bool any = false, all_ok = true;
    for (const auto& [name, fn] : suites) {
        if (suite != "all" && suite != name) continue;
        any = true;
        const bool ok = fn(seed);
        all_ok = all_ok && ok;
        std::printf("%-10s %s\n", name.c_str(), ok ? "PASS" : "FAIL");
    }
    if (!any) throw CLI::ValidationError("--suite", "unknown suite: " + suite);
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equal-cevian triangle and tetrahedron geometry toolkit"};
    app.require_subcommand(1);

    double alpha = 0.0, beta = 0.0, lmin = 0.0, lmax = 5.0, l = 1.0, k = 0.5, diameter = 1.0;
    int samples = 200, starts = 30;
    unsigned seed = 42;
    bool as_json = false, witness = false;
    std::string format = "csv", out_path, svg_path, base_csv, suite = "all";

    auto* loc = app.add_subcommand("locus", "sample the equal-cevian locus curve");
    loc->add_option("--alpha-deg", alpha, "base angle at A, degrees")->required();
    loc->add_option("--beta-deg", beta, "base angle at B, degrees")->required();
    loc->add_option("--lmin", lmin, "smallest cevian length (default: just above the bound)");
    loc->add_option("--lmax", lmax, "largest cevian length");
    loc->add_option("--samples", samples, "number of l values");
    loc->add_option("--format", format, "svg | csv | json")
        ->check(CLI::IsMember({"svg", "csv", "json"}));
    loc->add_option("--out", out_path, "output file (default: stdout)");

    auto* alt = app.add_subcommand("altitude", "roots of the altitude cubic");
    alt->add_option("--alpha-deg", alpha)->required();
    alt->add_option("--beta-deg", beta)->required();
    alt->add_flag("--json", as_json);

    auto* tri = app.add_subcommand("trisa", "k-trisa lengths and scalene witnesses");
    tri->add_option("--alpha-deg", alpha)->required();
    tri->add_option("--beta-deg", beta)->required();
    tri->add_option("--k", k, "trisa parameter (0.5 = bisector)")->required();
    tri->add_flag("--witness", witness, "search a beta != alpha with equal k-trisas");
    tri->add_flag("--json", as_json);

    auto* con = app.add_subcommand("conic", "six equal cevians: feet, Carnot, conic");
    con->add_option("--alpha-deg", alpha)->required();
    con->add_option("--beta-deg", beta)->required();
    con->add_option("--l", l, "common cevian length")->required();
    con->add_flag("--json", as_json);
    con->add_option("--svg", svg_path, "write an SVG of triangle, feet and conic");

    auto* tet = app.add_subcommand("tetra", "equal trihedral-bisector tetrahedra");
    tet->add_option("--base-angles-deg", base_csv, "base triangle angles A,B,C")->required();
    tet->add_option("--diameter", diameter, "circumdiameter of the base");
    tet->add_option("--starts", starts, "multistart count");
    tet->add_option("--seed", seed);
    tet->add_flag("--json", as_json);

    auto* ver = app.add_subcommand("verify", "run the property suites");
    ver->add_option("--suite", suite,
                    "all | gaps | circle | altitude | trisa | conic | locus | tetra");
    ver->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (loc->parsed()) return run_locus(alpha, beta, lmin, lmax, samples, format, out_path);
        if (alt->parsed()) return run_altitude(alpha, beta, as_json);
        if (tri->parsed()) return run_trisa(alpha, beta, k, witness, as_json);
        if (con->parsed()) return run_conic(alpha, beta, l, as_json, svg_path);
        if (tet->parsed()) return run_tetra(base_csv, diameter, starts, seed, as_json);
        if (ver->parsed()) return run_verify(suite, seed);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Tolerances are fixed here and must not be loosened to make a run pass.

#include "collocation.hpp"
#include "hyperoep/curves.hpp"
#include "hyperoep/errors.hpp"
#include "hyperoep/fixtures.hpp"
#include "hyperoep/geometry.hpp"
#include "hyperoep/grid2d.hpp"
#include "hyperoep/radial.hpp"
#include "hyperoep/selftest.hpp"
#include "hyperoep/verifier.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

using namespace hyperoep;

namespace {

// --- pinned tolerances -----------------------------------------------------
constexpr int kCasesPerProperty = 1000;
constexpr double kAlphaTol = 1e-6;
constexpr double kInverseTol = 1e-5;
constexpr double kCollocationTol = 1e-5;
constexpr double kRefineRatio = 3.5;     // PDE vs 1D error reduction per halving
constexpr double kProfileK = 1.0;        // sup error <= K h^2
constexpr double kNeumannRatio = 3.0;    // deviation reduction per halving
constexpr double kPerturbedMin = 0.05;   // deviation on the bumped domain
constexpr double kT0Window = 2.0;        // |t0 - t*| <= 2h
constexpr double kMinW = -5.0;           // min w >= -5 h^2
constexpr double kCurvatureRatio = 3.5; // kg error reduction when the spacing halves
constexpr double kPullbackSolver = 10.0; // residual <= 10 res + 4 tau_h
constexpr double kPullbackTerm = 4.0;
const std::vector<double> kMeshes{0.04, 0.02};
// ---------------------------------------------------------------------------

struct Criterion {
    int id;
    std::string title;
    bool pass = true;

    void expect(bool ok, const char* fmt, auto... args) {
        pass = pass && ok;
        std::printf("    [%s] ", ok ? " ok " : "FAIL");
        std::printf(fmt, args...);
        std::printf("\n");
    }
};

std::vector<Criterion> results;

Criterion& begin(int id, std::string title) {
    std::printf("criterion %d: %s\n", id, title.c_str());
    results.push_back({id, std::move(title)});
    return results.back();
}

const Nonlinearity kLinear = Nonlinearity::linear(1.0, 1.0);

struct Solved {
    fixtures::CanonicalCase cc;
    std::map<double, pde::Grid2DSolution> by_h;
};

std::map<pde::DomainKind, Solved> solved;

const pde::Grid2DSolution& solution(pde::DomainKind kind, double h) {
    Solved& s = solved[kind];
    if (!s.cc.domain) s.cc = fixtures::canonical_case(kind, kLinear, 1.0);
    auto it = s.by_h.find(h);
    if (it == s.by_h.end()) it = s.by_h.emplace(h, pde::solve_semilinear(s.cc.domain, kLinear, 1.0, h, 1e-10)).first;
    return it->second;
}

const fixtures::CanonicalCase& case_of(pde::DomainKind kind) {
    solution(kind, kMeshes.front());
    return solved[kind].cc;
}

const std::vector<pde::DomainKind> kCanonical{pde::DomainKind::DiskExterior, pde::DomainKind::HorodiskExterior,
                                              pde::DomainKind::EquidistantHalfPlane};

const char* name_of(pde::DomainKind k) {
    switch (k) {
        case pde::DomainKind::DiskExterior:
            return "disk";
        case pde::DomainKind::HorodiskExterior:
            return "horodisk";
        case pde::DomainKind::EquidistantHalfPlane:
            return "equidistant";
        default:
            return "bumped";
    }
}

radial::RadialProblem radial_problem(radial::Family family, int n, double param, const Nonlinearity& f) {
    radial::RadialProblem p;
    p.family = family;
    p.n = n;
    p.domain_param = param;
    p.f = f;
    p.C = 1.0;
    return p;
}

double ball_harmonic_alpha(double R) { return 1.0 / (std::sinh(R) * std::log(std::tanh(R / 2.0))); }

// ---------------------------------------------------------------------------

void criterion_geometry() {
    auto& c = begin(1, "geometry invariants over randomized cases");
    selftest::Options opt;
    opt.cases = kCasesPerProperty;
    for (const auto& r : selftest::run_geometry_suite(opt)) {
        c.expect(r.passed() && r.cases == kCasesPerProperty, "%-30s cases %d worst %.3e tol %.1e", r.name.c_str(),
                 r.cases, r.worst, r.tolerance);
    }
}

void criterion_horoball() {
    auto& c = begin(2, "horoball exterior, f = 1 - u: alpha against the characteristic root");
    for (int n = 2; n <= 5; ++n) {
        const auto sol = radial::shoot(radial_problem(radial::Family::HoroballExterior, n, 0.0, kLinear), 1e-10);
        const double m = n - 1.0;
        const double expected = (m - std::sqrt(m * m + 4.0)) / 2.0;
        c.expect(sol.converged && std::abs(sol.alpha - expected) <= kAlphaTol, "n=%d alpha %.12f expected %.12f",
                 n, sol.alpha, expected);
    }
}

void criterion_ball() {
    auto& c = begin(3, "ball exterior, f = 0: harmonic alpha and its inversion to R");
    for (double R : {0.5, 1.0, 2.0}) {
        const auto sol =
            radial::shoot(radial_problem(radial::Family::BallExterior, 2, R, Nonlinearity::zero()), 1e-10);
        const double expected = ball_harmonic_alpha(R);
        c.expect(sol.converged && std::abs(sol.alpha - expected) <= kAlphaTol, "R=%.1f alpha %.12f expected %.12f",
                 R, sol.alpha, expected);
        const auto inv =
            radial::solve_overdetermined(radial::Family::BallExterior, 2, Nonlinearity::zero(), expected, 1e-9, 1.0);
        c.expect(inv.found && std::abs(inv.domain_param - R) <= kInverseTol, "R=%.1f recovered %.9f", R,
                 inv.domain_param);
    }
}

void criterion_equidistant() {
    auto& c = begin(4, "equidistant family: shooting against collocation");
    const std::vector<std::pair<double, Nonlinearity>> cases{
        {0.0, Nonlinearity::linear(1.0, 1.0)}, {0.5, Nonlinearity::linear(2.0, 1.0)}, {-0.3, Nonlinearity::cubic()}};
    for (const auto& [offset, f] : cases) {
        const auto pr = radial_problem(radial::Family::EquidistantHalfSpace, 2, offset, f);
        const auto sol = radial::shoot(pr, 1e-10);
        const auto ref = testing::collocate([](double t) { return std::tanh(t); }, [&](double u) { return f(u); },
                                            [&](double u) { return f.derivative(u); }, offset, offset + 12.0, 1.0,
                                            radial::decay_rate(pr));
        const double diff = std::abs(sol.alpha + ref.slope_at_s0);
        c.expect(sol.converged && diff <= kCollocationTol, "c=%+.1f f=%s alpha %.10f collocation %.10f",
                 offset, f.description().c_str(), sol.alpha, -ref.slope_at_s0);
    }
}

void criterion_pde_ode() {
    auto& c = begin(5, "2D solve against the 1D profile under refinement");
    for (auto kind : kCanonical) {
        const auto& cc = case_of(kind);
        std::vector<double> errs;
        for (double h : kMeshes) {
            const auto& s = solution(kind, h);
            double err = 0.0;
            for (const auto& st : s.stencils) {
                const double x = s.grid.x(st.node % s.grid.nx);
                const double y = s.grid.y(st.node / s.grid.nx);
                err = std::max(err, std::abs(s.u[static_cast<std::size_t>(st.node)] - cc.exact(x, y)));
            }
            errs.push_back(err);
            c.expect(s.converged && err <= kProfileK * h * h, "%-11s h=%.3f sup error %.3e (K h^2 = %.3e)",
                     name_of(kind), h, err, kProfileK * h * h);
        }
        c.expect(errs[0] / errs[1] >= kRefineRatio, "%-11s reduction %.2f", name_of(kind), errs[0] / errs[1]);
    }
}

void criterion_neumann() {
    auto& c = begin(6, "Neumann constancy under refinement; bumped domain stays away from constant");
    for (auto kind : kCanonical) {
        std::vector<double> dev;
        for (double h : kMeshes) {
            const auto t = verify::neumann_trace(solution(kind, h));
            dev.push_back(t.max_deviation);
            c.expect(true, "%-11s h=%.3f mean %.6f max deviation %.3e", name_of(kind), h, t.mean, t.max_deviation);
        }
        c.expect(dev[0] / dev[1] >= kNeumannRatio, "%-11s reduction %.2f", name_of(kind), dev[0] / dev[1]);
    }
    fixtures::CanonicalParams p;
    p.bump = 0.2;
    const auto bumped = fixtures::canonical_case(pde::DomainKind::Custom, kLinear, 1.0, p);
    for (double h : kMeshes) {
        const auto s = pde::solve_semilinear(bumped.domain, kLinear, 1.0, h, 1e-10);
        const auto t = verify::neumann_trace(s);
        c.expect(t.max_deviation >= kPerturbedMin, "bumped      h=%.3f max deviation %.3f", h, t.max_deviation);
    }
}

void criterion_moving_plane() {
    auto& c = begin(7, "moving plane: symmetry parameter and sign of w");
    for (auto kind : kCanonical) {
        const auto& cc = case_of(kind);
        for (double h : kMeshes) {
            const auto rep = verify::moving_plane_scan(solution(kind, h), *cc.axis, cc.symmetric_t - 0.3,
                                                       cc.symmetric_t + 0.3, 30);
            c.expect(std::abs(rep.t0 - cc.symmetric_t) <= kT0Window * h && rep.min_w_included >= kMinW * h * h,
                     "%-11s h=%.3f t0 %+.3f (t* %+.3f) min w %.3e", name_of(kind), h, rep.t0, cc.symmetric_t,
                     rep.min_w_included);
        }
    }
    fixtures::CanonicalParams p;
    const double shift = 0.3;
    p.center_y = std::exp(shift);
    const auto cc = fixtures::canonical_case(pde::DomainKind::DiskExterior, kLinear, 1.0, p);
    geo::Vec up(2);
    up << 0.0, 1.0;
    const geo::Geodesic axis(geo::Point::half_space({0.0, 1.0}), up);
    for (double h : kMeshes) {
        const auto s = pde::solve_semilinear(cc.domain, kLinear, 1.0, h, 1e-10);
        const auto rep = verify::moving_plane_scan(s, axis, 0.0, 2.0 * shift, 30);
        c.expect(std::abs(rep.t0 - shift) <= kT0Window * h && rep.min_w_included >= kMinW * h * h,
                 "translated  h=%.3f t0 %+.3f (midline %+.3f) min w %.3e", h, rep.t0, shift, rep.min_w_included);
    }
}

// Samples of `param` on [0, 1] moved by a fixed isometry, so the chart
// spacing is uneven.
curves::SampledCurve moved_curve(const std::function<geo::Point(double)>& param, int samples, bool closed,
                                 double* spacing) {
    geo::Vec dir(2);
    dir << 1.0, 0.5;
    const geo::Point base = geo::Point::half_space({0.3, 1.0});
    const geo::Isometry I = geo::hyperbolic_translation(geo::Geodesic(base, dir / geo::metric_norm(base, dir)), 0.8);
    curves::SampledCurve c;
    c.closed = closed;
    std::vector<geo::Point> pts;
    for (int k = 0; k < samples; ++k) {
        const double t = closed ? static_cast<double>(k) / samples : static_cast<double>(k) / (samples - 1);
        pts.push_back(I.apply(param(t)));
        c.points.emplace_back(pts.back()[0], pts.back()[1]);
    }
    *spacing = 0.0;
    for (std::size_t k = 1; k < pts.size(); ++k) *spacing = std::max(*spacing, geo::distance(pts[k - 1], pts[k]));
    return c;
}

double kg_error(const curves::SampledCurve& c, double expected) {
    const auto rep = curves::geodesic_curvature(c);
    double e = 0.0;
    for (double k : rep.kg) e = std::max(e, std::abs(std::abs(k) - expected));
    return e;
}

void criterion_classification() {
    auto& c = begin(8, "boundary classification, ideal trace and normal rays");
    const geo::Point center = geo::Point::half_space({0.0, 1.0});
    struct Family {
        const char* name;
        double expected;
        bool closed;
        std::function<geo::Point(double)> param;
    };
    std::vector<Family> fams;
    for (double r : {0.3, 1.0, 2.0}) {
        fams.push_back({"circle", 1.0 / std::tanh(r), true, [=](double t) {
                            geo::Vec v(2);
                            v << std::cos(2 * std::numbers::pi * t), std::sin(2 * std::numbers::pi * t);
                            return geo::exp_map(center, v, r);
                        }});
    }
    // Horocycle y = 1 and equidistant curves at metric-uniform parameters.
    fams.push_back({"horocycle", 1.0, false, [](double t) { return geo::Point::half_space({-3.0 + 6.0 * t, 1.0}); }});
    for (double off : {0.4, 1.5}) {
        fams.push_back({"equidistant", std::tanh(off), false, [=](double t) {
                            const double r = std::exp(-2.0 + 4.0 * t);
                            return geo::Point::half_space({r * std::tanh(off), r / std::cosh(off)});
                        }});
    }
    for (const auto& f : fams) {
        double hs1 = 0.0, hs2 = 0.0;
        const double e1 = kg_error(moved_curve(f.param, 100, f.closed, &hs1), f.expected);
        const double e2 = kg_error(moved_curve(f.param, 200, f.closed, &hs2), f.expected);
        // Second order: the error drops by ~4 when the spacing halves.
        c.expect(e1 / e2 >= kCurvatureRatio && e2 < 1e-2,
                 "%-11s kg %.6f: error %.2e at spacing %.3f, %.2e at %.3f (ratio %.2f, error/spacing^2 %.2f)", f.name,
                 f.expected, e1, hs1, e2, hs2, e1 / e2, e2 / (hs2 * hs2));
    }
    const auto circle_kind = curves::geodesic_curvature(fixtures::circle_curve(0.0, 1.0, 1.0, 200)).classification;
    const auto horo_kind = curves::geodesic_curvature(fixtures::horocycle_curve(1.0, 20.0, 201)).classification;
    const auto eq_kind = curves::geodesic_curvature(fixtures::equidistant_curve(0.5, 5.0, 201)).classification;
    c.expect(circle_kind == curves::CurveClass::Circle && horo_kind == curves::CurveClass::Horocycle &&
                 eq_kind == curves::CurveClass::EquidistantOrGeodesic,
             "classes: %s / %s / %s", curves::to_string(circle_kind).c_str(), curves::to_string(horo_kind).c_str(),
             curves::to_string(eq_kind).c_str());

    const auto t0 = curves::ideal_boundary_trace(fixtures::circle_curve(0.0, 1.0, 0.5, 200));
    const auto t1 = curves::ideal_boundary_trace(fixtures::horocycle_curve(1.0, 1e4, 2001));
    const auto t2 = curves::ideal_boundary_trace(fixtures::equidistant_curve(0.5, 12.0, 501));
    c.expect(t0.points.size() == 0 && t1.points.size() == 1 && t2.points.size() == 2 && !t1.inconclusive &&
                 !t2.inconclusive,
             "ideal trace sizes %zu / %zu / %zu", t0.points.size(), t1.points.size(), t2.points.size());

    for (auto kind : kCanonical) {
        const auto& curve = case_of(kind).domain->boundary_curve;
        double clearance = INFINITY;
        for (std::size_t k = 0; k < curve.size(); ++k) {
            clearance = std::min(clearance, curves::normal_ideal_endpoint(curve, k).ray_clearance);
        }
        c.expect(clearance > 0.0, "%-11s normal rays over %zu samples, min clearance %.3f", name_of(kind),
                 curve.size(), clearance);
    }
}

void criterion_pullback() {
    auto& c = begin(9, "pullback residual under the stabilizer isometry");
    for (auto kind : kCanonical) {
        const auto& cc = case_of(kind);
        for (double h : kMeshes) {
            const auto& s = solution(kind, h);
            const auto rep = verify::pullback_solution_check(s, cc.stabilizer);
            const double term = verify::regular_node_residual(s, cc.exact_on(s.grid));
            const double bound = kPullbackSolver * s.residual + kPullbackTerm * term;
            c.expect(rep.residual <= bound && rep.coverage > 0.5,
                     "%-11s h=%.3f residual %.3e bound %.3e (solver %.1e, tau_h %.3e, coverage %.2f)", name_of(kind),
                     h, rep.residual, bound, s.residual, term, rep.coverage);
        }
    }
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    set_warning_sink([](std::string_view) {});
    const std::vector<std::function<void()>> all{criterion_geometry,      criterion_horoball,   criterion_ball,
                                                 criterion_equidistant,   criterion_pde_ode,    criterion_neumann,
                                                 criterion_moving_plane,  criterion_classification,
                                                 criterion_pullback};
    for (const auto& run : all) {
        try {
            run();
        } catch (const std::exception& e) {
            results.back().expect(false, "exception: %s", e.what());
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::printf("\nsummary (%.1f s)\n", secs);
    bool ok = true;
    for (const auto& r : results) {
        std::printf("%s criterion %d: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str());
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}

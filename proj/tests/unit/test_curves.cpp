#include "hyperoep/curves.hpp"
#include "hyperoep/errors.hpp"
#include "hyperoep/fixtures.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hyperoep;
using curves::SampledCurve;
using curves::Vec2;

namespace {

double max_kg_error(const curves::CurvatureReport& r, double expected) {
    double e = 0.0;
    for (double k : r.kg) e = std::max(e, std::abs(k - expected));
    return e;
}

geo::Vec v2(double a, double b) {
    geo::Vec v(2);
    v << a, b;
    return v;
}

// Circle sampled at equal hyperbolic angles about its center, so the samples
// are unevenly spaced in the chart.
SampledCurve metric_circle(const geo::Point& center, double r, int samples) {
    SampledCurve c;
    c.closed = true;
    const double y = center[1];
    for (int k = 0; k < samples; ++k) {
        const double a = 2 * std::numbers::pi * k / samples;
        const geo::Point p = geo::exp_map(center, v2(y * std::cos(a), y * std::sin(a)), r);
        c.points.emplace_back(p[0], p[1]);
    }
    return c;
}

}  // namespace

TEST_CASE("geodesic curvature: circles give coth r, second order in the spacing") {
    const geo::Point center = geo::Point::half_space({0.4, 1.3});
    for (double r : {0.3, 1.0, 2.0}) {
        // Counterclockwise travel: the curve bends to its left.
        const double expected = 1.0 / std::tanh(r);
        const auto even = curves::geodesic_curvature(fixtures::circle_curve(0.4, 1.3, r, 200));
        CHECK(max_kg_error(even, expected) < 1e-9);

        const auto coarse = curves::geodesic_curvature(metric_circle(center, r, 100));
        const auto fine = curves::geodesic_curvature(metric_circle(center, r, 200));
        const double e1 = max_kg_error(coarse, expected);
        const double e2 = max_kg_error(fine, expected);
        CHECK(e2 < 1e-2);
        CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.1));
        CHECK(fine.classification == curves::CurveClass::Circle);
        CHECK(fine.mean_abs == doctest::Approx(expected).epsilon(1e-3));
    }
}

TEST_CASE("geodesic curvature: horocycles and equidistant curves") {
    const auto horo = curves::geodesic_curvature(fixtures::horocycle_curve(2.0, 50.0, 401));
    CHECK(max_kg_error(horo, 1.0) < 1e-12);
    CHECK(horo.classification == curves::CurveClass::Horocycle);

    // A horocycle tangent to the real axis: Euclidean circle of radius 1 at (0, 1).
    SampledCurve tangent_circle;
    tangent_circle.closed = false;
    for (int k = 1; k < 200; ++k) {
        const double a = -std::numbers::pi / 2 + 2 * std::numbers::pi * k / 200.0;
        tangent_circle.points.emplace_back(std::cos(a), 1.0 + std::sin(a));
    }
    const auto horo2 = curves::geodesic_curvature(tangent_circle);
    CHECK(horo2.mean_abs == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(horo2.classification == curves::CurveClass::Horocycle);

    for (double c : {0.0, 0.4, 1.5}) {
        const auto eq = curves::geodesic_curvature(fixtures::equidistant_curve(c, 5.0, 301));
        CHECK(max_kg_error(eq, std::tanh(c)) < 1e-12);
        CHECK(eq.classification == curves::CurveClass::EquidistantOrGeodesic);
    }
}

TEST_CASE("geodesic curvature: invalid curves") {
    SampledCurve few;
    few.points = {{0, 1}, {1, 1}, {2, 1}};
    CHECK_THROWS_AS(curves::geodesic_curvature(few), InvalidInput);

    SampledCurve eight;
    eight.closed = true;
    for (int k = 0; k < 100; ++k) {
        const double t = 2 * std::numbers::pi * k / 100.0;
        eight.points.emplace_back(std::sin(t), 2.0 + std::sin(t) * std::cos(t));
    }
    CHECK(curves::self_intersects(eight));
    CHECK_THROWS_AS(curves::geodesic_curvature(eight), InvalidInput);
    CHECK_FALSE(curves::self_intersects(fixtures::circle_curve(0, 1, 1, 64)));

    SampledCurve below = fixtures::horocycle_curve(1.0, 2.0, 10);
    below.points[3].y() = -0.1;
    CHECK_THROWS_AS(curves::geodesic_curvature(below), InvalidInput);
}

TEST_CASE("normal ideal endpoint: disk exterior points away from the center") {
    const double cx = 0.3;
    const double cy = 1.2;
    const auto circle = fixtures::circle_curve(cx, cy, 0.7, 120);
    const geo::Point center = geo::Point::half_space({cx, cy});
    for (std::size_t k = 0; k < circle.size(); k += 7) {
        const auto rep = curves::normal_ideal_endpoint(circle, k);
        const Vec2& p = circle.points[k];
        const geo::Point q = geo::Point::half_space({p.x(), p.y()});
        const geo::IdealPoint expected = geo::ideal_endpoint(center, geo::direction_to(center, q));
        CHECK(rep.endpoint.chord_distance(expected) < 1e-3);
        CHECK(rep.ray_clearance > 0.0);
        CHECK_FALSE(rep.inconclusive);
    }
}

TEST_CASE("normal ideal endpoint: geodesic and horocycle boundaries") {
    SampledCurve axis;
    for (int k = -50; k <= 50; ++k) axis.points.emplace_back(0.0, std::exp(0.05 * k));
    axis.inward_side = -1;  // domain on the right of upward travel: x > 0
    const auto rep = curves::normal_ideal_endpoint(axis, 50);
    CHECK(rep.endpoint.chord_distance(geo::IdealPoint::from_half_space(v2(1.0, 0.0).head(1))) < 1e-9);
    CHECK(rep.ray_clearance > 0.0);

    SampledCurve horo = fixtures::horocycle_curve(1.0, 20.0, 201);
    horo.inward_side = -1;  // domain below the horocycle
    const std::size_t mid = 100;
    const auto down = curves::normal_ideal_endpoint(horo, mid);
    geo::Vec foot(1);
    foot << horo.points[mid].x();
    CHECK(down.endpoint.chord_distance(geo::IdealPoint::from_half_space(foot)) < 1e-9);
    CHECK(down.ray_clearance > 0.0);

    // A ray that crosses the curve again reports negative clearance.
    SampledCurve hook;
    for (int k = 0; k <= 100; ++k) hook.points.emplace_back(-1.0 + 0.02 * k, 1.0);
    for (int k = 1; k <= 50; ++k) hook.points.emplace_back(1.0 - 0.04 * k, 1.0 + 2.0 * k / 50.0);
    hook.inward_side = 1;
    const auto crossed = curves::normal_ideal_endpoint(hook, 25);
    CHECK(crossed.ray_clearance < 0.0);

    CHECK_THROWS_AS(curves::normal_ideal_endpoint(horo, horo.size()), InvalidInput);
}

TEST_CASE("ideal boundary trace counts accumulation points") {
    CHECK(curves::ideal_boundary_trace(fixtures::circle_curve(0, 1, 0.5, 64)).points.empty());

    const auto horo = curves::ideal_boundary_trace(fixtures::horocycle_curve(1.0, 1e4, 2001));
    REQUIRE(horo.points.size() == 1);
    CHECK(horo.points[0].is_half_space_infinity(1e-3));
    CHECK_FALSE(horo.violation);

    const auto eq = curves::ideal_boundary_trace(fixtures::equidistant_curve(0.5, 12.0, 501));
    REQUIRE(eq.points.size() == 2);
    const geo::IdealPoint zero = geo::IdealPoint::from_half_space(geo::Vec::Zero(1));
    const bool has_zero = eq.points[0].chord_distance(zero) < 1e-2 || eq.points[1].chord_distance(zero) < 1e-2;
    const bool has_inf = eq.points[0].is_half_space_infinity(1e-2) || eq.points[1].is_half_space_infinity(1e-2);
    CHECK(has_zero);
    CHECK(has_inf);

    // Two disjoint geodesic tails with three distinct endpoints.
    SampledCurve other;
    for (int k = -300; k <= 300; ++k) other.points.emplace_back(5.0, std::exp(0.04 * k));
    const auto bad = curves::ideal_boundary_trace({fixtures::equidistant_curve(0.0, 12.0, 501), other});
    CHECK(bad.points.size() == 3);
    CHECK(bad.violation);

    const auto short_tail = curves::ideal_boundary_trace(fixtures::horocycle_curve(1.0, 3.0, 21));
    CHECK(short_tail.inconclusive);
}

TEST_CASE("hyperbolic length") {
    const double r = 0.8;
    const double circ = curves::hyperbolic_length(fixtures::circle_curve(0.0, 1.0, r, 4000));
    CHECK(circ == doctest::Approx(2 * std::numbers::pi * std::sinh(r)).epsilon(1e-6));

    SampledCurve vertical;
    vertical.points = {{0.0, 1.0}, {0.0, std::exp(0.5)}, {0.0, std::exp(1.0)}};
    CHECK(curves::hyperbolic_length(vertical) == doctest::Approx(1.0).epsilon(1e-12));
}

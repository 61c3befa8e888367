#pragma once

// Sampled curves in the upper half-plane chart of H^2 and the checks run on
// domain boundaries: geodesic curvature, inward normal rays and the ideal
// points a properly embedded boundary accumulates at.

#include "hyperoep/geometry.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace hyperoep::curves {

using Vec2 = Eigen::Vector2d;

struct SampledCurve {
    /// Points (x, y), y > 0, of the half-plane chart.
    std::vector<Vec2> points;
    bool closed = false;
    /// +1 if the domain lies to the left of the direction of travel, -1 if to
    /// the right.
    int inward_side = 1;

    std::size_t size() const { return points.size(); }
};

enum class CurveClass { Circle, Horocycle, EquidistantOrGeodesic };
std::string to_string(CurveClass c);

struct CurvatureReport {
    /// Signed geodesic curvature (positive when the curve bends to its left),
    /// one entry per sample; open curves have no value at their end samples.
    std::vector<double> kg;
    double mean_abs = 0.0;
    double spread = 0.0;
    CurveClass classification = CurveClass::EquidistantOrGeodesic;
};

/// Throws InvalidInput for fewer than 5 samples or a self-intersecting curve.
CurvatureReport geodesic_curvature(const SampledCurve& curve, double class_tol = 1e-3);

bool self_intersects(const SampledCurve& curve);

struct NormalRayReport {
    geo::IdealPoint endpoint;
    /// Minimum distance from the ray (past a fixed offset) to the curve;
    /// negative when the ray crosses the curve again.
    double ray_clearance = 0.0;
    bool inconclusive = false;
    double window = 0.0;
};

/// Traces the inward normal geodesic at sample `index` to its ideal endpoint.
NormalRayReport normal_ideal_endpoint(const SampledCurve& curve, std::size_t index);

struct IdealTraceReport {
    std::vector<geo::IdealPoint> points;
    bool inconclusive = false;
    /// More than two accumulation points: impossible for a valid input.
    bool violation = false;
    std::string note;
};

/// Closed curves have no ideal points. Open curves must reach the chart
/// boundary at both tails (1 - |b| < 1e-3 in the ball chart); tail points
/// closer than 1e-2 are merged.
IdealTraceReport ideal_boundary_trace(const SampledCurve& curve);
IdealTraceReport ideal_boundary_trace(const std::vector<SampledCurve>& components);

/// Hyperbolic length of the polyline.
double hyperbolic_length(const SampledCurve& curve);

}  // namespace hyperoep::curves

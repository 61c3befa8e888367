#pragma once

// Checks run on a finished 2D solution: boundary normal derivative, isometry
// invariance, moving-plane reflection comparison and a discrete maximum
// principle audit.

#include "hyperoep/geometry.hpp"
#include "hyperoep/grid2d.hpp"

#include <string>
#include <vector>

namespace hyperoep::verify {

struct TraceSample {
    double arclength = 0.0;  // hyperbolic, from the first boundary sample
    double x = 0.0;
    double y = 0.0;
    double u = 0.0;
    double dnu = 0.0;  // outward normal derivative, metric-unit normal
};

struct NeumannTrace {
    std::vector<TraceSample> samples;
    double mean = 0.0;
    double max_deviation = 0.0;
    /// Samples dropped because they sit within max(corner_margin, 4h) (chart
    /// distance) of the truncation or a lateral cut-off.
    int skipped = 0;
};

/// Normal derivative at the samples of the domain's boundary curve from a
/// local least-squares cubic through nearby interior nodes and the zero
/// boundary value. Throws InvalidInput if the solution did not converge.
NeumannTrace neumann_trace(const pde::Grid2DSolution& solution, double corner_margin = 0.16);

struct PullbackReport {
    /// max |y^2 L_h v + f(v)| over covered regular nodes, v = u o I^-1.
    double residual = 0.0;
    /// The solver's own residual restricted to the same nodes.
    double base_residual = 0.0;
    double coverage = 0.0;
    int nodes = 0;
};

/// Residual of the pulled-back solution on the nodes whose 5-point stencil
/// (mapped by I^-1) stays inside the bicubic-interpolable region. Warns when
/// coverage drops below one half.
PullbackReport pullback_solution_check(const pde::Grid2DSolution& solution, const geo::Isometry& I);

/// pullback_solution_check of `field` under the identity: for an exact
/// solution this is its truncation error on the checked nodes, the
/// discretization term of the pullback bound.
double regular_node_residual(const pde::Grid2DSolution& solution, std::vector<double> field);

struct MovingPlaneReport {
    std::vector<double> t;
    /// min of w_t = u - u o R_t over nodes p on the minus side with R_t p in
    /// the domain; NaN when there is no such pair.
    std::vector<double> min_w;
    std::vector<int> pairs;
    /// Reflection of the plus-side part of the domain stays inside the
    /// (untruncated) domain.
    std::vector<char> inclusion;
    /// Nodes whose reflection leaves the truncated domain.
    std::vector<int> mismatch;
    /// max |u - u o R_t| over nodes whose reflection can be interpolated.
    std::vector<double> defect;

    double t0 = 0.0;
    double defect_t0 = 0.0;
    /// min of min_w over the parameters where inclusion holds.
    double min_w_included = 0.0;
};

/// Scans the hyperplanes orthogonal to gamma at steps + 1 parameters in
/// [t_lo, t_hi]. t0 minimizes the mismatch count, ties broken by the defect.
MovingPlaneReport moving_plane_scan(const pde::Grid2DSolution& solution, const geo::Geodesic& gamma, double t_lo,
                                    double t_hi, int steps);

struct MaxPrincipleReport {
    bool verdict = false;
    double min_interior = 0.0;
    double min_boundary = 0.0;
    /// max |y^2 L w + c w| over interior nodes.
    double equation_residual = 0.0;
    bool equation_ok = false;
    bool boundary_ok = false;
};

/// Audits  Delta w + c w = 0, c <= 0, w >= 0 on the boundary  =>  w >= 0 on a
/// grid whose `interior` flags mark the nodes carrying the equation (5-point
/// stencil with nodal neighbour values). Throws InvalidInput if c > 0 anywhere.
MaxPrincipleReport discrete_max_principle_check(const pde::Grid2D& grid, const std::vector<char>& interior,
                                                const std::vector<double>& w, const std::vector<double>& c,
                                                double tol);

}  // namespace hyperoep::verify

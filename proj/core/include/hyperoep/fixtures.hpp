#pragma once

// Canonical truncated domains in the half-plane chart, their exact discrete
// references (a 1D profile composed with the transversal coordinate), the
// isometries that preserve them and the curves used by the boundary checks.

#include "hyperoep/curves.hpp"
#include "hyperoep/geometry.hpp"
#include "hyperoep/grid2d.hpp"
#include "hyperoep/radial.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace hyperoep::fixtures {

struct CanonicalParams {
    /// Disk: hyperbolic radius and center (half-plane chart).
    double radius = 0.5;
    double center_x = 0.0;
    double center_y = 1.0;
    /// Truncation depth: u = C where the transversal coordinate reaches D.
    double depth = 1.0;
    /// Horodisk {y > 1}: lateral cut-offs at x = +-half_width.
    double half_width = 1.0;
    /// Equidistant {asinh(x / y) > offset}: cut-offs at |log r| = half_length.
    double offset = 0.0;
    double half_length = 1.0;
    /// Bump added to the equidistant boundary (0 keeps it canonical).
    double bump = 0.0;
    double bump_width = 0.5;
    /// Margin (relative to the window size) around the truncated domain.
    double margin = 0.05;
};

struct CanonicalCase {
    std::shared_ptr<const pde::DomainSpec2D> domain;
    radial::RadialProblem problem;
    /// Solution of the truncated 1D problem, u(depth-end) = C.
    std::shared_ptr<const radial::RadialSolution> profile;
    /// Isometry mapping the domain to itself.
    geo::Isometry stabilizer = geo::Isometry::identity(2);
    /// Geodesic for the moving-plane scan and the parameter of the symmetry
    /// hyperplane along it.
    std::optional<geo::Geodesic> axis;
    double symmetric_t = 0.0;

    /// Exact solution of the truncated problem at a chart point.
    double exact(double x, double y) const;
    /// Exact solution sampled at the nodes of a grid (0 outside the domain).
    std::vector<double> exact_on(const pde::Grid2D& grid) const;
};

/// Builds the domain for `kind` (Custom is the bumped equidistant domain)
/// and solves the matching 1D problem to tolerance `tol`.
CanonicalCase canonical_case(pde::DomainKind kind, const Nonlinearity& f, double C, const CanonicalParams& params = {},
                             double tol = 1e-11);

/// Interior of a hyperbolic disk with u = 0 on its boundary (no truncation).
std::shared_ptr<pde::DomainSpec2D> disk_interior(double center_x, double center_y, double radius);

// Boundary curves with long tails for the classification checks.
curves::SampledCurve circle_curve(double center_x, double center_y, double radius, std::size_t samples);
/// Horocycle y = height, x in [-extent, extent], domain above.
curves::SampledCurve horocycle_curve(double height, double extent, std::size_t samples);
/// Equidistant curve asinh(x / y) = offset, log r in [-extent, extent],
/// domain on the side of larger x / y.
curves::SampledCurve equidistant_curve(double offset, double extent, std::size_t samples);

}  // namespace hyperoep::fixtures

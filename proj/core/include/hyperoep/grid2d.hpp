#pragma once

// Finite differences for  Delta u + f(u) = 0  on truncated domains of H^2 in
// the upper half-plane chart, where Delta = y^2 (d_xx + d_yy).
//
// A domain is the intersection of up to three regions given by level-set
// functions, each positive inside: the boundary region (u = 0 on its zero
// set), the truncation region (u = C on its zero set) and optional lateral
// cut-offs (u = g on their zero set). Nodes adjacent to a zero set use
// Shortley-Weller stencils with the exact crossing distance.

#include "hyperoep/curves.hpp"
#include "hyperoep/geometry.hpp"
#include "hyperoep/nonlinearity.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hyperoep::pde {

using Field = std::function<double(double x, double y)>;

enum class DomainKind { DiskExterior, HorodiskExterior, EquidistantHalfPlane, Custom };
std::string to_string(DomainKind kind);

struct DomainSpec2D {
    DomainKind kind = DomainKind::Custom;
    std::string name;

    /// Chart window containing the truncated domain.
    double x_min = -1.0;
    double x_max = 1.0;
    double y_min = 0.5;
    double y_max = 2.0;

    Field boundary;
    Field far;
    Field lateral;
    Field lateral_value;
    double truncation_distance = 0.0;

    /// Distance-like coordinate s(x, y) whose 1D profile is the exact solution
    /// on canonical domains (ODE variable of the matching radial family).
    Field transversal;

    // Canonical parameters (unused entries stay at their defaults).
    std::optional<geo::Point> center;
    double radius = 0.0;
    double level = 0.0;
    double offset = 0.0;

    /// Samples of the part of the boundary inside the truncation.
    curves::SampledCurve boundary_curve;

    bool inside(double x, double y) const;
    /// Inside the boundary region only (ignores truncation and cut-offs).
    bool inside_untruncated(double x, double y) const { return boundary(x, y) > 0.0; }
    void validate() const;
};

struct Grid2D {
    double x0 = 0.0;
    double y0 = 0.0;
    double h = 0.0;
    int nx = 0;
    int ny = 0;

    double x(int i) const { return x0 + i * h; }
    double y(int j) const { return y0 + j * h; }
    int index(int i, int j) const { return j * nx + i; }
    std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }

    /// Uniform grid covering [x_min, x_max] x [y_min, y_max] with spacing h.
    static Grid2D covering(double x_min, double x_max, double y_min, double y_max, double h);
};

/// y^2 times the 5-point Laplacian at interior nodes; the outer ring of the
/// grid is a ghost ring and is returned as 0. Throws ChartError if y <= 0.
std::vector<double> hyperbolic_laplacian(const Grid2D& grid, const std::vector<double>& u);

enum class NodeMask : std::uint8_t { Interior = 0, DirichletZero = 1, FarField = 2, Lateral = 3 };

/// Neighbour in one of the four directions of an interior node.
struct Arm {
    int unknown = -1;      // unknown index, -1 if the arm ends on a zero set
    double length = 0.0;   // chart distance to the neighbour or crossing
    double value = 0.0;    // boundary value when unknown == -1
};

struct Stencil {
    int node = 0;
    std::array<Arm, 4> arms;  // W, E, S, N
};

struct SolveOptions {
    int max_newton = 40;
    /// Field used as the Newton starting point; default C/2.
    Field initial_guess;
};

struct Grid2DSolution {
    std::shared_ptr<const DomainSpec2D> domain;
    Grid2D grid;
    Nonlinearity f = Nonlinearity::zero();
    double C = 1.0;
    double tol = 0.0;

    std::vector<NodeMask> mask;
    std::vector<double> u;
    /// node index -> unknown index (-1 for non-interior nodes)
    std::vector<int> unknown_of;
    std::vector<Stencil> stencils;

    /// max |r_q| over interior nodes, rows of short-arm stencils scaled by
    /// (regular diagonal) / (stencil diagonal).
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
    bool m_matrix = false;
    bool positive = false;
    std::string message;

    double h() const { return grid.h; }
    bool interior(int i, int j) const;
    /// Discrete residual y^2 L_h u + f(u) at every interior node, for an
    /// arbitrary nodal field with this solution's boundary data.
    std::vector<double> discrete_residual(const std::vector<double>& field) const;
    /// Bilinear interpolation; nullopt unless all four nodes are interior.
    std::optional<double> bilinear(double x, double y) const;
    /// 4x4 Lagrange interpolation; nullopt unless all 16 nodes are interior.
    std::optional<double> bicubic(double x, double y) const;
};

Grid2DSolution solve_semilinear(std::shared_ptr<const DomainSpec2D> domain, const Nonlinearity& f, double C, double h,
                                double tol, const SolveOptions& options = {});

struct TopologyReport {
    int domain_components = 0;
    int complement_components = 0;
    bool ok() const { return domain_components == 1 && complement_components <= 1; }
};

/// Connected components (4-neighbour) of interior nodes and of nodes in the
/// complement of the boundary region.
TopologyReport check_topology(const Grid2DSolution& solution);

}  // namespace hyperoep::pde

#include "hyperoep/grid2d.hpp"

#include "hyperoep/errors.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hyperoep::pde {

namespace {

constexpr int kDi[4] = {-1, 1, 0, 0};
constexpr int kDj[4] = {0, 0, -1, 1};
constexpr double kMinArm = 1e-6;

// First zero of g on (0, 1] given g(0) > 0 >= g(1).
double crossing(const std::function<double(double)>& g) {
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Grid coordinates within rounding of a node are moved onto it, so that
// interpolation at nodes returns the nodal value.
double snap(double f) {
    const double r = std::round(f);
    return std::abs(f - r) < 1e-9 ? r : f;
}

int count_components(const Grid2D& g, const std::vector<char>& member) {
    std::vector<int> label(g.size(), -1);
    std::vector<int> stack;
    int components = 0;
    for (int start = 0; start < static_cast<int>(g.size()); ++start) {
        if (!member[static_cast<std::size_t>(start)] || label[static_cast<std::size_t>(start)] >= 0) continue;
        stack.push_back(start);
        label[static_cast<std::size_t>(start)] = components;
        while (!stack.empty()) {
            const int k = stack.back();
            stack.pop_back();
            const int i = k % g.nx;
            const int j = k / g.nx;
            for (int d = 0; d < 4; ++d) {
                const int ii = i + kDi[d];
                const int jj = j + kDj[d];
                if (ii < 0 || jj < 0 || ii >= g.nx || jj >= g.ny) continue;
                const int kk = g.index(ii, jj);
                if (member[static_cast<std::size_t>(kk)] && label[static_cast<std::size_t>(kk)] < 0) {
                    label[static_cast<std::size_t>(kk)] = components;
                    stack.push_back(kk);
                }
            }
        }
        ++components;
    }
    return components;
}

}  // namespace

std::string to_string(DomainKind kind) {
    switch (kind) {
        case DomainKind::DiskExterior: return "disk_exterior";
        case DomainKind::HorodiskExterior: return "horodisk_exterior";
        case DomainKind::EquidistantHalfPlane: return "equidistant_half_plane";
        case DomainKind::Custom: return "custom";
    }
    return "?";
}

bool DomainSpec2D::inside(double x, double y) const {
    if (!(boundary(x, y) > 0.0)) return false;
    if (far && !(far(x, y) > 0.0)) return false;
    if (lateral && !(lateral(x, y) > 0.0)) return false;
    return true;
}

void DomainSpec2D::validate() const {
    if (!boundary) throw InvalidInput("domain: missing boundary level set");
    if (!(x_max > x_min) || !(y_max > y_min)) throw InvalidInput("domain: empty chart window");
    if (!(y_min > 0.0)) throw ChartError("domain: chart window must lie in y > 0");
    if (lateral && !lateral_value) throw InvalidInput("domain: lateral cut-off without boundary data");
}

Grid2D Grid2D::covering(double x_min, double x_max, double y_min, double y_max, double h) {
    if (!(h > 0.0)) throw InvalidInput("grid: mesh width must be > 0");
    Grid2D g;
    g.h = h;
    g.x0 = x_min;
    g.y0 = y_min;
    g.nx = static_cast<int>(std::ceil((x_max - x_min) / h - 1e-9)) + 1;
    g.ny = static_cast<int>(std::ceil((y_max - y_min) / h - 1e-9)) + 1;
    if (g.nx < 3 || g.ny < 3) throw InvalidInput("grid: fewer than 3 nodes per direction");
    return g;
}

std::vector<double> hyperbolic_laplacian(const Grid2D& g, const std::vector<double>& u) {
    if (u.size() != g.size()) throw InvalidInput("hyperbolic_laplacian: field size does not match grid");
    if (!(g.y0 > 0.0)) throw ChartError("hyperbolic_laplacian: grid reaches y <= 0");
    std::vector<double> out(g.size(), 0.0);
    const double inv_h2 = 1.0 / (g.h * g.h);
    for (int j = 1; j + 1 < g.ny; ++j) {
        const double y = g.y(j);
        for (int i = 1; i + 1 < g.nx; ++i) {
            const int k = g.index(i, j);
            const double lap = u[static_cast<std::size_t>(k - 1)] + u[static_cast<std::size_t>(k + 1)] +
                               u[static_cast<std::size_t>(k - g.nx)] + u[static_cast<std::size_t>(k + g.nx)] -
                               4.0 * u[static_cast<std::size_t>(k)];
            out[static_cast<std::size_t>(k)] = y * y * lap * inv_h2;
        }
    }
    return out;
}

bool Grid2DSolution::interior(int i, int j) const {
    if (i < 0 || j < 0 || i >= grid.nx || j >= grid.ny) return false;
    return mask[static_cast<std::size_t>(grid.index(i, j))] == NodeMask::Interior;
}

std::vector<double> Grid2DSolution::discrete_residual(const std::vector<double>& field) const {
    if (field.size() != grid.size()) throw InvalidInput("discrete_residual: field size does not match grid");
    std::vector<double> r(stencils.size());
    for (std::size_t k = 0; k < stencils.size(); ++k) {
        const Stencil& st = stencils[k];
        const double y = grid.y(st.node / grid.nx);
        const double u0 = field[static_cast<std::size_t>(st.node)];
        double lap = 0.0;
        for (int axis = 0; axis < 2; ++axis) {
            const Arm& a = st.arms[static_cast<std::size_t>(2 * axis)];
            const Arm& b = st.arms[static_cast<std::size_t>(2 * axis + 1)];
            const int node_a = st.node + (axis == 0 ? -1 : -grid.nx);
            const int node_b = st.node + (axis == 0 ? 1 : grid.nx);
            const double ua = a.unknown >= 0 ? field[static_cast<std::size_t>(node_a)] : a.value;
            const double ub = b.unknown >= 0 ? field[static_cast<std::size_t>(node_b)] : b.value;
            const double s = a.length + b.length;
            lap += 2.0 * ((ua - u0) / a.length + (ub - u0) / b.length) / s;
        }
        r[k] = y * y * lap + f(u0);
    }
    return r;
}

std::optional<double> Grid2DSolution::bilinear(double x, double y) const {
    const double fx = snap((x - grid.x0) / grid.h);
    const double fy = snap((y - grid.y0) / grid.h);
    const int i = static_cast<int>(std::floor(fx));
    const int j = static_cast<int>(std::floor(fy));
    if (!interior(i, j) || !interior(i + 1, j) || !interior(i, j + 1) || !interior(i + 1, j + 1)) return std::nullopt;
    const double tx = fx - i;
    const double ty = fy - j;
    auto at = [&](int a, int b) { return u[static_cast<std::size_t>(grid.index(a, b))]; };
    return (1 - tx) * (1 - ty) * at(i, j) + tx * (1 - ty) * at(i + 1, j) + (1 - tx) * ty * at(i, j + 1) +
           tx * ty * at(i + 1, j + 1);
}

std::optional<double> Grid2DSolution::bicubic(double x, double y) const {
    const double fx = snap((x - grid.x0) / grid.h);
    const double fy = snap((y - grid.y0) / grid.h);
    const int i = static_cast<int>(std::floor(fx)) - 1;
    const int j = static_cast<int>(std::floor(fy)) - 1;
    for (int b = 0; b < 4; ++b) {
        for (int a = 0; a < 4; ++a) {
            if (!interior(i + a, j + b)) return std::nullopt;
        }
    }
    auto weights = [](double t, double w[4]) {
        // Lagrange basis on nodes -1, 0, 1, 2.
        w[0] = -t * (t - 1) * (t - 2) / 6.0;
        w[1] = (t + 1) * (t - 1) * (t - 2) / 2.0;
        w[2] = -(t + 1) * t * (t - 2) / 2.0;
        w[3] = (t + 1) * t * (t - 1) / 6.0;
    };
    double wx[4];
    double wy[4];
    weights(fx - (i + 1), wx);
    weights(fy - (j + 1), wy);
    double acc = 0.0;
    for (int b = 0; b < 4; ++b) {
        double row = 0.0;
        for (int a = 0; a < 4; ++a) row += wx[a] * u[static_cast<std::size_t>(grid.index(i + a, j + b))];
        acc += wy[b] * row;
    }
    return acc;
}

Grid2DSolution solve_semilinear(std::shared_ptr<const DomainSpec2D> domain, const Nonlinearity& f, double C, double h,
                                double tol, const SolveOptions& options) {
    if (!domain) throw InvalidInput("solve_semilinear: null domain");
    domain->validate();
    if (!(tol > 0.0)) throw InvalidInput("solve_semilinear: tolerance must be > 0");
    if (!(C > 0.0)) throw InvalidInput("solve_semilinear: C must be > 0");
    const DomainSpec2D& dom = *domain;

    Grid2DSolution sol;
    sol.domain = domain;
    sol.grid = Grid2D::covering(dom.x_min, dom.x_max, dom.y_min, dom.y_max, h);
    sol.f = f;
    sol.C = C;
    sol.tol = tol;
    sol.m_matrix = f.nonincreasing();
    const Grid2D& g = sol.grid;

    sol.mask.assign(g.size(), NodeMask::Interior);
    sol.u.assign(g.size(), 0.0);
    sol.unknown_of.assign(g.size(), -1);
    std::vector<int> node_of;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x(i);
            const double y = g.y(j);
            const auto k = static_cast<std::size_t>(g.index(i, j));
            if (!(dom.boundary(x, y) > 0.0)) {
                sol.mask[k] = NodeMask::DirichletZero;
            } else if (dom.far && !(dom.far(x, y) > 0.0)) {
                sol.mask[k] = NodeMask::FarField;
                sol.u[k] = C;
            } else if (dom.lateral && !(dom.lateral(x, y) > 0.0)) {
                sol.mask[k] = NodeMask::Lateral;
                sol.u[k] = dom.lateral_value(x, y);
            } else if (i == 0 || j == 0 || i + 1 == g.nx || j + 1 == g.ny) {
                throw InvalidInput("solve_semilinear: domain '" + dom.name + "' touches the chart window edge");
            } else {
                sol.unknown_of[k] = static_cast<int>(node_of.size());
                node_of.push_back(static_cast<int>(k));
            }
        }
    }
    const int n_unknowns = static_cast<int>(node_of.size());
    if (n_unknowns == 0) throw InvalidInput("solve_semilinear: no interior nodes at this mesh width");

    // Stencils with exact crossing distances.
    sol.stencils.resize(node_of.size());
    for (int q = 0; q < n_unknowns; ++q) {
        const int k = node_of[static_cast<std::size_t>(q)];
        const int i = k % g.nx;
        const int j = k / g.nx;
        Stencil& st = sol.stencils[static_cast<std::size_t>(q)];
        st.node = k;
        const double xa = g.x(i);
        const double ya = g.y(j);
        for (int d = 0; d < 4; ++d) {
            const int kk = g.index(i + kDi[d], j + kDj[d]);
            Arm& arm = st.arms[static_cast<std::size_t>(d)];
            if (sol.unknown_of[static_cast<std::size_t>(kk)] >= 0) {
                arm.unknown = sol.unknown_of[static_cast<std::size_t>(kk)];
                arm.length = h;
                continue;
            }
            const double xb = g.x(i + kDi[d]);
            const double yb = g.y(j + kDj[d]);
            auto along = [&](const Field& phi) {
                return [&phi, xa, ya, xb, yb](double t) { return phi(xa + t * (xb - xa), ya + t * (yb - ya)); };
            };
            double theta = 2.0;
            double value = 0.0;
            if (!(dom.boundary(xb, yb) > 0.0)) {
                theta = crossing(along(dom.boundary));
                value = 0.0;
            }
            if (dom.far && !(dom.far(xb, yb) > 0.0)) {
                const double t = crossing(along(dom.far));
                if (t < theta) {
                    theta = t;
                    value = C;
                }
            }
            if (dom.lateral && !(dom.lateral(xb, yb) > 0.0)) {
                const double t = crossing(along(dom.lateral));
                if (t < theta) {
                    theta = t;
                    value = dom.lateral_value(xa + t * (xb - xa), ya + t * (yb - ya));
                }
            }
            theta = std::max(theta, kMinArm);
            arm.unknown = -1;
            arm.length = theta * h;
            arm.value = value;
        }
    }

    // Newton iteration.
    Eigen::VectorXd U(n_unknowns);
    for (int q = 0; q < n_unknowns; ++q) {
        const int k = node_of[static_cast<std::size_t>(q)];
        U[q] = options.initial_guess ? options.initial_guess(g.x(k % g.nx), g.y(k / g.nx)) : 0.5 * C;
    }
    auto scatter = [&](const Eigen::VectorXd& v) {
        for (int q = 0; q < n_unknowns; ++q) sol.u[static_cast<std::size_t>(node_of[static_cast<std::size_t>(q)])] = v[q];
    };
    auto residual_of = [&](const Eigen::VectorXd& v) {
        scatter(v);
        const std::vector<double> r = sol.discrete_residual(sol.u);
        return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size())));
    };

    Eigen::SparseMatrix<double> J(n_unknowns, n_unknowns);
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(n_unknowns) * 5);
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    bool analyzed = false;

    // Rows of short-arm stencils are scaled down to the regular diagonal so
    // their rounding error does not dominate the stopping test.
    Eigen::VectorXd weight(n_unknowns);
    for (int q = 0; q < n_unknowns; ++q) {
        const Stencil& st = sol.stencils[static_cast<std::size_t>(q)];
        double diag = 0.0;
        for (int axis = 0; axis < 2; ++axis) {
            const double a = st.arms[static_cast<std::size_t>(2 * axis)].length;
            const double b = st.arms[static_cast<std::size_t>(2 * axis + 1)].length;
            diag += 2.0 / (a * b);
        }
        weight[q] = std::min(1.0, 4.0 / (h * h * diag));
    }
    auto norm_of = [&](const Eigen::VectorXd& r) { return r.cwiseProduct(weight).cwiseAbs().maxCoeff(); };

    Eigen::VectorXd F = residual_of(U);
    double norm = norm_of(F);
    Eigen::VectorXd best = U;
    double best_norm = norm;
    int it = 0;
    for (; it < options.max_newton && norm > tol; ++it) {
        trips.clear();
        for (int q = 0; q < n_unknowns; ++q) {
            const Stencil& st = sol.stencils[static_cast<std::size_t>(q)];
            const double y = g.y(st.node / g.nx);
            double diag = 0.0;
            for (int axis = 0; axis < 2; ++axis) {
                const Arm& a = st.arms[static_cast<std::size_t>(2 * axis)];
                const Arm& b = st.arms[static_cast<std::size_t>(2 * axis + 1)];
                const double s = a.length + b.length;
                const double ca = 2.0 * y * y / (a.length * s);
                const double cb = 2.0 * y * y / (b.length * s);
                diag -= ca + cb;
                if (a.unknown >= 0) trips.emplace_back(q, a.unknown, ca);
                if (b.unknown >= 0) trips.emplace_back(q, b.unknown, cb);
            }
            trips.emplace_back(q, q, diag + f.derivative(U[q]));
        }
        J.setFromTriplets(trips.begin(), trips.end());
        if (!analyzed) {
            lu.analyzePattern(J);
            analyzed = true;
        }
        lu.factorize(J);
        if (lu.info() != Eigen::Success) {
            sol.message = "Newton: singular Jacobian";
            break;
        }
        const Eigen::VectorXd step = lu.solve(F);
        double lambda = 1.0;
        Eigen::VectorXd trial;
        Eigen::VectorXd Ft;
        double trial_norm = INFINITY;
        for (int ls = 0; ls < 30; ++ls) {
            trial = U - lambda * step;
            Ft = residual_of(trial);
            trial_norm = norm_of(Ft);
            if (trial_norm <= (1.0 - 1e-4 * lambda) * norm) break;
            lambda *= 0.5;
        }
        if (!(trial_norm < norm)) {
            sol.message = "Newton stagnated";
            break;
        }
        U = trial;
        F = Ft;
        norm = trial_norm;
        if (norm < best_norm) {
            best = U;
            best_norm = norm;
        }
    }
    scatter(best);
    sol.residual = best_norm;
    sol.iterations = it;
    sol.converged = best_norm <= tol;
    if (sol.converged) {
        sol.message = "converged";
    } else if (sol.message.empty()) {
        std::ostringstream os;
        os << "Newton did not reach tolerance " << tol << " (residual " << best_norm << ")";
        sol.message = os.str();
    }
    sol.positive = true;
    for (int k : node_of) sol.positive = sol.positive && sol.u[static_cast<std::size_t>(k)] > 0.0;
    return sol;
}

TopologyReport check_topology(const Grid2DSolution& s) {
    std::vector<char> inside(s.grid.size());
    std::vector<char> complement(s.grid.size());
    for (std::size_t k = 0; k < s.grid.size(); ++k) {
        inside[k] = s.mask[k] == NodeMask::Interior;
        complement[k] = s.mask[k] == NodeMask::DirichletZero;
    }
    TopologyReport r;
    r.domain_components = count_components(s.grid, inside);
    r.complement_components = count_components(s.grid, complement);
    return r;
}

}  // namespace hyperoep::pde

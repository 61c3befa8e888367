#include "hyperoep/verifier.hpp"

#include "hyperoep/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

namespace hyperoep::verify {

namespace {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Vec3 lift(double x, double y) {
    const double q = x * x + y * y;
    return {x / y, (1.0 - q) / (2.0 * y), (1.0 + q) / (2.0 * y)};
}

// Half-plane chart point of a hyperboloid point; nullopt near infinity.
std::optional<Vec2> chart(const Vec3& X) {
    const double s = X[1] + X[2];
    if (!(s > 1e-12)) return std::nullopt;
    return Vec2(X[0] / s, 1.0 / s);
}

double lorentz(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] - a[2] * b[2]; }

Mat3 matrix_of(const geo::Isometry& I) {
    if (I.dim() != 2) throw UnsupportedDimension("verifier: isometry must act on H^2");
    return I.matrix();
}

Vec2 gradient(const pde::Field& phi, double x, double y) {
    const double e = 1e-7 * std::max(1.0, std::abs(x) + y);
    return {(phi(x + e, y) - phi(x - e, y)) / (2 * e), (phi(x, y + e) - phi(x, y - e)) / (2 * e)};
}

Vec2 project(const pde::Field& phi, Vec2 p) {
    for (int it = 0; it < 8; ++it) {
        const double v = phi(p.x(), p.y());
        const Vec2 g = gradient(phi, p.x(), p.y());
        const double g2 = g.squaredNorm();
        if (!(g2 > 0.0)) break;
        p -= v / g2 * g;
        if (std::abs(v) < 1e-15) break;
    }
    return p;
}

double chart_distance(const Vec2& a, const Vec2& b) {
    const Vec3 d = lift(a.x(), a.y()) - lift(b.x(), b.y());
    return 2.0 * std::asinh(0.5 * std::sqrt(std::max(0.0, lorentz(d, d))));
}

bool near_other_sets(const pde::DomainSpec2D& dom, const Vec2& b, double radius) {
    for (int k = 0; k < 16; ++k) {
        const double a = 2.0 * std::numbers::pi * k / 16.0;
        for (double r : {0.5 * radius, radius}) {
            const double x = b.x() + r * std::cos(a);
            const double y = b.y() + r * std::sin(a);
            if (y <= 0.0) return true;
            if (dom.far && !(dom.far(x, y) > 0.0)) return true;
            if (dom.lateral && !(dom.lateral(x, y) > 0.0)) return true;
        }
    }
    return false;
}

}  // namespace

NeumannTrace neumann_trace(const pde::Grid2DSolution& s, double corner_margin) {
    if (!s.converged) throw InvalidInput("neumann_trace: solution did not converge");
    const pde::DomainSpec2D& dom = *s.domain;
    const curves::SampledCurve& curve = dom.boundary_curve;
    if (curve.size() < 2) throw InvalidInput("neumann_trace: domain has no boundary samples");
    const pde::Grid2D& g = s.grid;
    const double h = g.h;

    NeumannTrace out;
    double arclength = 0.0;
    for (std::size_t k = 0; k < curve.size(); ++k) {
        if (k > 0) arclength += chart_distance(curve.points[k - 1], curve.points[k]);
        const Vec2 b = project(dom.boundary, curve.points[k]);
        if (near_other_sets(dom, b, std::max(corner_margin, 4.0 * h))) {
            ++out.skipped;
            continue;
        }
        const Vec2 grad_phi = gradient(dom.boundary, b.x(), b.y());
        const Vec2 n_in = grad_phi.normalized();
        const Vec2 tangent(-n_in.y(), n_in.x());

        // Local cubic in scaled coordinates around b.
        std::vector<Vec2> pts;
        std::vector<double> vals;
        const int i0 = static_cast<int>(std::floor((b.x() - g.x0) / h));
        const int j0 = static_cast<int>(std::floor((b.y() - g.y0) / h));
        for (int j = j0 - 3; j <= j0 + 4; ++j) {
            for (int i = i0 - 3; i <= i0 + 4; ++i) {
                if (!s.interior(i, j)) continue;
                const Vec2 p(g.x(i), g.y(j));
                if ((p - b).norm() > 3.0 * h) continue;
                pts.push_back(p);
                vals.push_back(s.u[static_cast<std::size_t>(g.index(i, j))]);
            }
        }
        for (int m = -3; m <= 3; ++m) {
            pts.push_back(m == 0 ? b : project(dom.boundary, b + m * h * tangent));
            vals.push_back(0.0);
        }
        Eigen::MatrixXd A(static_cast<Eigen::Index>(pts.size()), 10);
        Eigen::VectorXd rhs(static_cast<Eigen::Index>(pts.size()));
        for (std::size_t r = 0; r < pts.size(); ++r) {
            const double a = (pts[r].x() - b.x()) / h;
            const double c = (pts[r].y() - b.y()) / h;
            A.row(static_cast<Eigen::Index>(r)) << 1, a, c, a * a, a * c, c * c, a * a * a, a * a * c, a * c * c,
                c * c * c;
            rhs[static_cast<Eigen::Index>(r)] = vals[r];
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
        if (qr.rank() < 10) {
            ++out.skipped;
            continue;
        }
        const Eigen::VectorXd coef = qr.solve(rhs);
        const Vec2 grad_u(coef[1] / h, coef[2] / h);
        out.samples.push_back({arclength, b.x(), b.y(), 0.0, -b.y() * grad_u.dot(n_in)});
    }
    if (out.samples.empty()) throw InvalidInput("neumann_trace: every boundary sample was skipped");
    double acc = 0.0;
    for (const TraceSample& t : out.samples) acc += t.dnu;
    out.mean = acc / static_cast<double>(out.samples.size());
    for (const TraceSample& t : out.samples) out.max_deviation = std::max(out.max_deviation, std::abs(t.dnu - out.mean));
    return out;
}

PullbackReport pullback_solution_check(const pde::Grid2DSolution& s, const geo::Isometry& I) {
    const Mat3 M = matrix_of(I.inverse());
    const pde::Grid2D& g = s.grid;
    const double h = g.h;
    const std::vector<double> own = s.discrete_residual(s.u);

    PullbackReport rep;
    int interior = 0;
    for (std::size_t q = 0; q < s.stencils.size(); ++q) {
        const pde::Stencil& st = s.stencils[q];
        ++interior;
        bool regular = true;
        for (const pde::Arm& a : st.arms) regular = regular && a.unknown >= 0;
        if (!regular) continue;
        const int i = st.node % g.nx;
        const int j = st.node / g.nx;
        const double x = g.x(i);
        const double y = g.y(j);
        double v[5];
        const double px[5] = {x, x - h, x + h, x, x};
        const double py[5] = {y, y, y, y - h, y + h};
        bool covered = true;
        for (int m = 0; m < 5 && covered; ++m) {
            const std::optional<Vec2> p = chart(M * lift(px[m], py[m]));
            if (!p) {
                covered = false;
                break;
            }
            const std::optional<double> val = s.bicubic(p->x(), p->y());
            if (!val) covered = false;
            else v[m] = *val;
        }
        if (!covered) continue;
        // Same arithmetic as the solver's stencil, so I = identity reproduces it.
        double lap = 0.0;
        for (int axis = 0; axis < 2; ++axis) {
            lap += 2.0 * ((v[1 + 2 * axis] - v[0]) / h + (v[2 + 2 * axis] - v[0]) / h) / (h + h);
        }
        rep.residual = std::max(rep.residual, std::abs(y * y * lap + s.f(v[0])));
        rep.base_residual = std::max(rep.base_residual, std::abs(own[q]));
        ++rep.nodes;
    }
    rep.coverage = interior > 0 ? static_cast<double>(rep.nodes) / interior : 0.0;
    if (rep.coverage < 0.5) {
        std::ostringstream os;
        os << "pullback_solution_check: image covers only " << rep.coverage << " of the interior nodes";
        warn(os.str());
    }
    return rep;
}

double regular_node_residual(const pde::Grid2DSolution& s, std::vector<double> field) {
    if (field.size() != s.grid.size()) throw InvalidInput("regular_node_residual: field size does not match the grid");
    pde::Grid2DSolution copy = s;
    copy.u = std::move(field);
    return pullback_solution_check(copy, geo::Isometry::identity(2)).residual;
}

MovingPlaneReport moving_plane_scan(const pde::Grid2DSolution& s, const geo::Geodesic& gamma, double t_lo, double t_hi,
                                    int steps) {
    if (gamma.dim() != 2) throw UnsupportedDimension("moving_plane_scan: geodesic must lie in H^2");
    if (steps < 1 || !(t_hi > t_lo)) throw InvalidInput("moving_plane_scan: need t_lo < t_hi and steps >= 1");
    const pde::DomainSpec2D& dom = *s.domain;
    const pde::Grid2D& g = s.grid;

    std::vector<Vec3> lifted;
    std::vector<int> nodes;
    for (const pde::Stencil& st : s.stencils) {
        nodes.push_back(st.node);
        lifted.push_back(lift(g.x(st.node % g.nx), g.y(st.node / g.nx)));
    }

    MovingPlaneReport rep;
    bool any_pairs = false;
    for (int k = 0; k <= steps; ++k) {
        const double t = t_lo + (t_hi - t_lo) * k / steps;
        const geo::Hyperplane plane = geo::Hyperplane::orthogonal_to(gamma, t);
        const geo::Vec nv = plane.lorentz_normal();
        const Vec3 N(nv[0], nv[1], nv[2]);
        const Mat3 R = matrix_of(geo::reflection(plane));

        double min_w = INFINITY;
        int pairs = 0;
        bool inclusion = true;
        int mismatch = 0;
        double defect = 0.0;
        for (std::size_t q = 0; q < nodes.size(); ++q) {
            const Vec3& X = lifted[q];
            const double side = lorentz(X, N);
            const std::optional<Vec2> rp = chart(R * X);
            const double uq = s.u[static_cast<std::size_t>(nodes[q])];
            if (!rp || !dom.inside(rp->x(), rp->y())) ++mismatch;
            if (side > 0.0 && (!rp || !dom.inside_untruncated(rp->x(), rp->y()))) inclusion = false;
            if (!rp) continue;
            const std::optional<double> ur = s.bilinear(rp->x(), rp->y());
            if (!ur) continue;
            defect = std::max(defect, std::abs(uq - *ur));
            if (side < 0.0) {
                min_w = std::min(min_w, uq - *ur);
                ++pairs;
            }
        }
        any_pairs = any_pairs || pairs > 0;
        rep.t.push_back(t);
        rep.min_w.push_back(pairs > 0 ? min_w : kNaN);
        rep.pairs.push_back(pairs);
        rep.inclusion.push_back(inclusion ? 1 : 0);
        rep.mismatch.push_back(mismatch);
        rep.defect.push_back(defect);
    }
    if (!any_pairs) throw InvalidInput("moving_plane_scan: reflected overlap is empty for every scanned parameter");

    std::size_t best = 0;
    for (std::size_t k = 1; k < rep.t.size(); ++k) {
        if (rep.mismatch[k] < rep.mismatch[best] ||
            (rep.mismatch[k] == rep.mismatch[best] && rep.defect[k] < rep.defect[best])) {
            best = k;
        }
    }
    rep.t0 = rep.t[best];
    rep.defect_t0 = rep.defect[best];
    rep.min_w_included = INFINITY;
    for (std::size_t k = 0; k < rep.t.size(); ++k) {
        if (rep.inclusion[k] && rep.pairs[k] > 0) rep.min_w_included = std::min(rep.min_w_included, rep.min_w[k]);
    }
    if (std::isinf(rep.min_w_included)) rep.min_w_included = kNaN;
    return rep;
}

MaxPrincipleReport discrete_max_principle_check(const pde::Grid2D& g, const std::vector<char>& interior,
                                                const std::vector<double>& w, const std::vector<double>& c,
                                                double tol) {
    if (interior.size() != g.size() || w.size() != g.size() || c.size() != g.size()) {
        throw InvalidInput("discrete_max_principle_check: field sizes do not match the grid");
    }
    if (!(tol > 0.0)) throw InvalidInput("discrete_max_principle_check: tolerance must be > 0");
    for (double ck : c) {
        if (ck > 0.0) throw InvalidInput("discrete_max_principle_check: hypothesis c <= 0 violated");
    }
    MaxPrincipleReport rep;
    rep.min_interior = INFINITY;
    rep.min_boundary = INFINITY;
    const double inv_h2 = 1.0 / (g.h * g.h);
    const int di[4] = {-1, 1, 0, 0};
    const int dj[4] = {0, 0, -1, 1};
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const auto k = static_cast<std::size_t>(g.index(i, j));
            if (!interior[k]) continue;
            if (i == 0 || j == 0 || i + 1 == g.nx || j + 1 == g.ny) {
                throw InvalidInput("discrete_max_principle_check: interior node on the grid edge");
            }
            double lap = -4.0 * w[k];
            for (int d = 0; d < 4; ++d) {
                const auto kk = static_cast<std::size_t>(g.index(i + di[d], j + dj[d]));
                lap += w[kk];
                if (!interior[kk]) rep.min_boundary = std::min(rep.min_boundary, w[kk]);
            }
            const double y = g.y(j);
            rep.equation_residual = std::max(rep.equation_residual, std::abs(y * y * lap * inv_h2 + c[k] * w[k]));
            rep.min_interior = std::min(rep.min_interior, w[k]);
        }
    }
    if (std::isinf(rep.min_interior)) throw InvalidInput("discrete_max_principle_check: no interior nodes");
    rep.equation_ok = rep.equation_residual <= tol;
    rep.boundary_ok = rep.min_boundary >= -tol;
    rep.verdict = rep.min_interior >= -tol;
    return rep;
}

}  // namespace hyperoep::verify

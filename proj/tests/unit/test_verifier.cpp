#include "hyperoep/errors.hpp"
#include "hyperoep/fixtures.hpp"
#include "hyperoep/verifier.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <doctest.h>

#include <cmath>
#include <random>

using namespace hyperoep;

namespace {

const Nonlinearity kLinear = Nonlinearity::linear(1.0, 1.0);

geo::Vec v2(double a, double b) {
    geo::Vec v(2);
    v << a, b;
    return v;
}

pde::Grid2DSolution solve(const fixtures::CanonicalCase& cc, double h) {
    auto s = pde::solve_semilinear(cc.domain, kLinear, 1.0, h, 1e-9);
    REQUIRE(s.converged);
    return s;
}

// Local truncation error of the exact profile at the nodes the pullback check
// uses (regular stencils), i.e. the discretization term of its bound.
double consistency_term(const fixtures::CanonicalCase& cc, const pde::Grid2DSolution& s) {
    return verify::regular_node_residual(s, cc.exact_on(s.grid));
}

}  // namespace

TEST_CASE("neumann trace: horodisk linear case approaches the closed form") {
    fixtures::CanonicalParams p;
    p.depth = 4.0;
    const auto cc = fixtures::canonical_case(pde::DomainKind::HorodiskExterior, kLinear, 1.0, p);
    const auto s = solve(cc, 0.04);
    const auto trace = verify::neumann_trace(s);
    CHECK(trace.mean == doctest::Approx((1.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-3));
    CHECK(trace.mean == doctest::Approx(cc.profile->alpha).epsilon(1e-3));
    CHECK(trace.max_deviation < 1e-4);
    CHECK(trace.skipped > 0);
    for (std::size_t k = 1; k < trace.samples.size(); ++k) {
        CHECK(trace.samples[k].arclength > trace.samples[k - 1].arclength);
    }
}

TEST_CASE("neumann trace: disk exterior deviation shrinks, bumped domain does not") {
    const auto disk = fixtures::canonical_case(pde::DomainKind::DiskExterior, kLinear, 1.0);
    const auto t1 = verify::neumann_trace(solve(disk, 0.04));
    const auto t2 = verify::neumann_trace(solve(disk, 0.02));
    CHECK(t1.max_deviation / t2.max_deviation >= 3.0);
    CHECK(t2.mean == doctest::Approx(disk.profile->alpha).epsilon(1e-3));
    CHECK(t2.skipped == 0);

    fixtures::CanonicalParams p;
    p.bump = 0.2;
    const auto bumped = fixtures::canonical_case(pde::DomainKind::Custom, kLinear, 1.0, p);
    const auto b1 = verify::neumann_trace(solve(bumped, 0.04));
    const auto b2 = verify::neumann_trace(solve(bumped, 0.02));
    CHECK(b1.max_deviation >= 0.05);
    CHECK(b2.max_deviation >= 0.05);
}

TEST_CASE("neumann trace: requires a converged solution") {
    const auto cc = fixtures::canonical_case(pde::DomainKind::HorodiskExterior, kLinear, 1.0);
    pde::SolveOptions opts;
    opts.max_newton = 0;
    const auto s = pde::solve_semilinear(cc.domain, kLinear, 1.0, 0.05, 1e-9, opts);
    CHECK_THROWS_AS(verify::neumann_trace(s), InvalidInput);
}

TEST_CASE("pullback: identity reproduces the solver residual") {
    const auto cc = fixtures::canonical_case(pde::DomainKind::DiskExterior, kLinear, 1.0);
    const auto s = solve(cc, 0.05);
    const auto rep = verify::pullback_solution_check(s, geo::Isometry::identity(2));
    CHECK(rep.coverage > 0.5);
    CHECK(rep.residual == rep.base_residual);
    CHECK(rep.residual <= s.residual);
}

TEST_CASE("pullback: stabilizers of canonical solutions") {
    for (auto kind : {pde::DomainKind::DiskExterior, pde::DomainKind::HorodiskExterior,
                      pde::DomainKind::EquidistantHalfPlane}) {
        CAPTURE(pde::to_string(kind));
        const auto cc = fixtures::canonical_case(kind, kLinear, 1.0);
        for (double h : {0.04, 0.02}) {
            const auto s = solve(cc, h);
            const auto rep = verify::pullback_solution_check(s, cc.stabilizer);
            CHECK(rep.coverage > 0.5);
            CHECK(rep.residual <= 10.0 * s.residual + 4.0 * consistency_term(cc, s));
        }
    }
}

TEST_CASE("pullback: far translation warns about coverage") {
    const auto cc = fixtures::canonical_case(pde::DomainKind::EquidistantHalfPlane, kLinear, 1.0);
    const auto s = solve(cc, 0.05);
    std::vector<std::string> warnings;
    set_warning_sink([&](std::string_view m) { warnings.emplace_back(m); });
    const geo::Geodesic axis(geo::Point::half_space({0.0, 1.0}), v2(0.0, 1.0));
    const auto rep = verify::pullback_solution_check(s, geo::hyperbolic_translation(axis, 5.0));
    set_warning_sink(nullptr);
    CHECK(rep.coverage < 0.5);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("covers") != std::string::npos);
}

TEST_CASE("moving plane: symmetric equidistant domain") {
    const auto cc = fixtures::canonical_case(pde::DomainKind::EquidistantHalfPlane, kLinear, 1.0);
    for (double h : {0.04, 0.02}) {
        const auto s = solve(cc, h);
        const auto rep = verify::moving_plane_scan(s, *cc.axis, -0.3, 0.3, 30);
        CHECK(std::abs(rep.t0 - cc.symmetric_t) <= 2 * h);
        CHECK(rep.defect_t0 >= 0.0);
        CHECK(rep.defect_t0 <= 2 * h * h);
        CHECK(rep.min_w_included >= -5 * h * h);
        CHECK(rep.t.size() == 31);
        CHECK(rep.t.front() == -0.3);
        CHECK(rep.t.back() == doctest::Approx(0.3));
    }
}

TEST_CASE("moving plane: translated disk recovers the midline") {
    fixtures::CanonicalParams p;
    const double shift = 0.3;
    p.center_y = std::exp(shift);
    const auto cc = fixtures::canonical_case(pde::DomainKind::DiskExterior, kLinear, 1.0, p);
    const double h = 0.04;
    const auto s = solve(cc, h);
    const geo::Geodesic axis(geo::Point::half_space({0.0, 1.0}), v2(0.0, 1.0));
    const auto rep = verify::moving_plane_scan(s, axis, 0.0, 0.6, 30);
    CHECK(std::abs(rep.t0 - shift) <= 2 * h);
    CHECK(rep.min_w_included >= -5 * h * h);
    // The reflected cap stays inside the domain only below the center.
    CHECK(rep.inclusion.front());
    CHECK_FALSE(rep.inclusion.back());
    CHECK(rep.mismatch[15] <= rep.mismatch.front());
}

TEST_CASE("moving plane: errors") {
    const auto cc = fixtures::canonical_case(pde::DomainKind::DiskExterior, kLinear, 1.0);
    const auto s = solve(cc, 0.05);
    CHECK_THROWS_AS(verify::moving_plane_scan(s, *cc.axis, 0.3, -0.3, 10), InvalidInput);
    CHECK_THROWS_AS(verify::moving_plane_scan(s, *cc.axis, -0.3, 0.3, 0), InvalidInput);
    CHECK_THROWS_AS(verify::moving_plane_scan(s, *cc.axis, 3.0, 4.0, 4), InvalidInput);
}

TEST_CASE("max principle audit") {
    const pde::Grid2D g = pde::Grid2D::covering(-1.0, 1.0, 1.0, 3.0, 0.1);
    std::vector<char> interior(g.size(), 0);
    for (int j = 1; j + 1 < g.ny; ++j) {
        for (int i = 1; i + 1 < g.nx; ++i) interior[static_cast<std::size_t>(g.index(i, j))] = 1;
    }
    const std::vector<double> c(g.size(), -1.0);

    SUBCASE("zero field") {
        const auto rep = verify::discrete_max_principle_check(g, interior, std::vector<double>(g.size(), 0.0), c, 1e-9);
        CHECK(rep.verdict);
        CHECK(rep.equation_ok);
        CHECK(rep.boundary_ok);
    }

    SUBCASE("direct solve with nonnegative boundary data") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::vector<double> w(g.size(), 0.0);
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (!interior[k]) w[k] = unif(rng);
        }
        // y^2 (5-point) w - w = 0 at interior nodes, assembled independently.
        std::vector<int> id(g.size(), -1);
        int n = 0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (interior[k]) id[k] = n++;
        }
        std::vector<Eigen::Triplet<double>> trips;
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
        const double s = 1.0 / (g.h * g.h);
        for (int j = 1; j + 1 < g.ny; ++j) {
            for (int i = 1; i + 1 < g.nx; ++i) {
                const int row = id[static_cast<std::size_t>(g.index(i, j))];
                const double y2 = g.y(j) * g.y(j);
                trips.emplace_back(row, row, -4.0 * y2 * s - 1.0);
                for (auto [di, dj] : {std::pair{-1, 0}, {1, 0}, {0, -1}, {0, 1}}) {
                    const auto kk = static_cast<std::size_t>(g.index(i + di, j + dj));
                    if (id[kk] >= 0) trips.emplace_back(row, id[kk], y2 * s);
                    else rhs[row] -= y2 * s * w[kk];
                }
            }
        }
        Eigen::SparseMatrix<double> A(n, n);
        A.setFromTriplets(trips.begin(), trips.end());
        Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(A);
        const Eigen::VectorXd x = lu.solve(rhs);
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (id[k] >= 0) w[k] = x[id[k]];
        }
        const auto rep = verify::discrete_max_principle_check(g, interior, w, c, 1e-8);
        CHECK(rep.equation_ok);
        CHECK(rep.boundary_ok);
        CHECK(rep.verdict);
        CHECK(rep.min_interior > 0.0);
    }

    SUBCASE("negative bubble violating the equation") {
        std::vector<double> w(g.size(), 0.0);
        w[static_cast<std::size_t>(g.index(10, 10))] = -0.5;
        const auto rep = verify::discrete_max_principle_check(g, interior, w, c, 1e-9);
        CHECK_FALSE(rep.verdict);
        CHECK_FALSE(rep.equation_ok);
    }

    SUBCASE("hypothesis c <= 0") {
        std::vector<double> bad = c;
        bad[static_cast<std::size_t>(g.index(4, 4))] = 0.1;
        CHECK_THROWS_AS(verify::discrete_max_principle_check(g, interior, std::vector<double>(g.size(), 0.0), bad, 1e-9),
                        InvalidInput);
    }
}

TEST_CASE("max principle audit on a computed moving-plane comparison field") {
    // w = u - u o R with R the symmetry reflection; for linear f the difference
    // solves Delta w - w = 0 exactly where both stencils are regular.
    const auto cc = fixtures::canonical_case(pde::DomainKind::HorodiskExterior, kLinear, 1.0);
    const auto s = solve(cc, 0.05);
    const geo::Isometry R = geo::reflection(geo::Hyperplane::orthogonal_to(*cc.axis, cc.symmetric_t));
    std::vector<double> w(s.grid.size(), 0.0);
    std::vector<char> interior(s.grid.size(), 0);
    for (const pde::Stencil& st : s.stencils) {
        bool regular = true;
        for (const pde::Arm& a : st.arms) regular = regular && a.unknown >= 0;
        const double x = s.grid.x(st.node % s.grid.nx);
        const double y = s.grid.y(st.node / s.grid.nx);
        const geo::Point q = R.apply(geo::Point::half_space({x, y}));
        const auto mirrored = s.bilinear(q[0], q[1]);
        if (regular && mirrored) interior[static_cast<std::size_t>(st.node)] = 1;
        w[static_cast<std::size_t>(st.node)] = mirrored ? s.u[static_cast<std::size_t>(st.node)] - *mirrored : 0.0;
    }
    const auto rep = verify::discrete_max_principle_check(s.grid, interior, w, std::vector<double>(s.grid.size(), -1.0),
                                                          1e-6);
    CHECK(rep.verdict);
    CHECK(rep.equation_ok);
}

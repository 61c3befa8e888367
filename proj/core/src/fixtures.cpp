#include "hyperoep/fixtures.hpp"

#include "hyperoep/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hyperoep::fixtures {

namespace {

using curves::Vec2;

geo::Vec vec2(double a, double b) {
    geo::Vec v(2);
    v << a, b;
    return v;
}

// Hyperbolic distance between chart points (x, y) and (cx, cy).
double chart_distance(double x, double y, double cx, double cy) {
    const double dx = x - cx;
    const double dy = y - cy;
    return 2.0 * std::asinh(0.5 * std::sqrt((dx * dx + dy * dy) / (y * cy)));
}

void set_window(pde::DomainSpec2D& d, double x_lo, double x_hi, double y_lo, double y_hi, double margin) {
    const double mx = margin * (x_hi - x_lo);
    const double my = margin * (y_hi - y_lo);
    d.x_min = x_lo - mx;
    d.x_max = x_hi + mx;
    d.y_min = std::max(y_lo - my, 0.5 * y_lo);
    d.y_max = y_hi + my;
}

double bump_profile(double tau, double amplitude, double width) {
    if (amplitude == 0.0 || std::abs(tau) >= width) return 0.0;
    const double c = std::cos(0.5 * std::numbers::pi * tau / width);
    return amplitude * c * c;
}

std::shared_ptr<pde::DomainSpec2D> disk_exterior(const CanonicalParams& p) {
    const double cx = p.center_x;
    const double cy = p.center_y;
    const double R = p.radius;
    const double outer = R + p.depth;
    auto d = std::make_shared<pde::DomainSpec2D>();
    d->kind = pde::DomainKind::DiskExterior;
    d->name = "disk_exterior";
    d->boundary = [=](double x, double y) { return chart_distance(x, y, cx, cy) - R; };
    d->far = [=](double x, double y) { return outer - chart_distance(x, y, cx, cy); };
    d->transversal = [=](double x, double y) { return chart_distance(x, y, cx, cy); };
    d->truncation_distance = p.depth;
    d->center = geo::Point::half_space({cx, cy});
    d->radius = R;
    const double ey = cy * std::cosh(outer);
    const double er = cy * std::sinh(outer);
    set_window(*d, cx - er, cx + er, ey - er, ey + er, p.margin);
    d->boundary_curve = circle_curve(cx, cy, R, 720);
    return d;
}

std::shared_ptr<pde::DomainSpec2D> horodisk_exterior(const CanonicalParams& p, pde::Field profile) {
    const double L = p.half_width;
    const double top = std::exp(p.depth);
    auto d = std::make_shared<pde::DomainSpec2D>();
    d->kind = pde::DomainKind::HorodiskExterior;
    d->name = "horodisk_exterior";
    d->boundary = [](double, double y) { return std::log(y); };
    d->far = [D = p.depth](double, double y) { return D - std::log(y); };
    d->lateral = [L](double x, double) { return L - std::abs(x); };
    d->lateral_value = std::move(profile);
    d->transversal = [](double, double y) { return std::log(y); };
    d->truncation_distance = p.depth;
    d->level = 0.0;
    set_window(*d, -L, L, 1.0, top, p.margin);
    curves::SampledCurve c;
    const int m = 400;
    for (int k = 0; k <= m; ++k) c.points.emplace_back(-L + 2.0 * L * k / m, 1.0);
    c.inward_side = 1;
    d->boundary_curve = std::move(c);
    return d;
}

std::shared_ptr<pde::DomainSpec2D> equidistant(const CanonicalParams& p, pde::Field profile, bool bumped) {
    const double c0 = p.offset;
    const double a = p.half_length;
    const double amp = bumped ? p.bump : 0.0;
    const double w = p.bump_width;
    if (amp != 0.0 && !(w < a)) throw InvalidInput("equidistant fixture: bump must end before the cut-offs");
    auto d = std::make_shared<pde::DomainSpec2D>();
    d->kind = bumped ? pde::DomainKind::Custom : pde::DomainKind::EquidistantHalfPlane;
    d->name = bumped ? "bumped_equidistant" : "equidistant_half_plane";
    d->boundary = [=](double x, double y) {
        const double tau = 0.5 * std::log(x * x + y * y);
        return std::asinh(x / y) - c0 - bump_profile(tau, amp, w);
    };
    d->far = [top = c0 + p.depth](double x, double y) { return top - std::asinh(x / y); };
    d->lateral = [a](double x, double y) { return a - std::abs(0.5 * std::log(x * x + y * y)); };
    d->lateral_value = std::move(profile);
    d->transversal = [](double x, double y) { return std::asinh(x / y); };
    d->truncation_distance = p.depth;
    d->offset = c0;

    double x_lo = INFINITY, x_hi = -INFINITY, y_lo = INFINITY, y_hi = -INFINITY;
    const int m = 200;
    for (double r : {std::exp(-a), std::exp(a)}) {
        for (int k = 0; k <= m; ++k) {
            const double s = c0 + p.depth * k / m;
            const double x = r * std::tanh(s);
            const double y = r / std::cosh(s);
            x_lo = std::min(x_lo, x);
            x_hi = std::max(x_hi, x);
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    }
    if (c0 < 0.0 && c0 + p.depth > 0.0) y_hi = std::exp(a);
    set_window(*d, x_lo, x_hi, y_lo, y_hi, p.margin);

    curves::SampledCurve c;
    for (int k = 0; k <= 400; ++k) {
        const double tau = -a + 2.0 * a * k / 400;
        const double s = c0 + bump_profile(tau, amp, w);
        const double r = std::exp(tau);
        c.points.emplace_back(r * std::tanh(s), r / std::cosh(s));
    }
    c.inward_side = -1;
    d->boundary_curve = std::move(c);
    return d;
}

}  // namespace

double CanonicalCase::exact(double x, double y) const {
    const double s = domain->transversal(x, y);
    if (s <= problem.s0()) return 0.0;
    return profile->value(s);
}

std::vector<double> CanonicalCase::exact_on(const pde::Grid2D& g) const {
    std::vector<double> out(g.size(), 0.0);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x(i);
            const double y = g.y(j);
            if (domain->boundary(x, y) > 0.0) out[static_cast<std::size_t>(g.index(i, j))] = exact(x, y);
        }
    }
    return out;
}

CanonicalCase canonical_case(pde::DomainKind kind, const Nonlinearity& f, double C, const CanonicalParams& p,
                             double tol) {
    if (!(p.depth > 0.0)) throw InvalidInput("canonical_case: depth must be > 0");
    if (!(p.margin > 0.0)) throw InvalidInput("canonical_case: margin must be > 0");
    CanonicalCase cc;
    cc.problem.n = 2;
    cc.problem.f = f;
    cc.problem.C = C;
    switch (kind) {
        case pde::DomainKind::DiskExterior:
            if (!(p.radius > 0.0) || !(p.center_y > 0.0)) throw InvalidInput("canonical_case: bad disk");
            cc.problem.family = radial::Family::BallExterior;
            cc.problem.domain_param = p.radius;
            break;
        case pde::DomainKind::HorodiskExterior:
            if (!(p.half_width > 0.0)) throw InvalidInput("canonical_case: half_width must be > 0");
            cc.problem.family = radial::Family::HoroballExterior;
            cc.problem.domain_param = 0.0;
            break;
        case pde::DomainKind::EquidistantHalfPlane:
        case pde::DomainKind::Custom:
            if (!(p.half_length > 0.0)) throw InvalidInput("canonical_case: half_length must be > 0");
            cc.problem.family = radial::Family::EquidistantHalfSpace;
            cc.problem.domain_param = p.offset;
            break;
    }
    cc.problem.validate();
    auto profile = std::make_shared<radial::RadialSolution>(radial::solve_truncated(cc.problem, p.depth, tol));
    cc.profile = profile;

    switch (kind) {
        case pde::DomainKind::DiskExterior: {
            cc.domain = disk_exterior(p);
            const geo::Point c = geo::Point::half_space({p.center_x, p.center_y});
            cc.stabilizer = geo::rotation_at(c, vec2(1, 0), vec2(0, 1), 0.3);
            cc.axis = geo::Geodesic(c, vec2(0.0, p.center_y));
            break;
        }
        case pde::DomainKind::HorodiskExterior: {
            cc.domain = horodisk_exterior(p, [profile](double, double y) { return profile->value(std::log(y)); });
            geo::Vec v(1);
            v << 0.2;
            cc.stabilizer = geo::parabolic_translation(geo::IdealPoint::half_space_infinity(2), v);
            cc.axis = geo::Geodesic(geo::Point::half_space({0.0, 1.0}), vec2(1.0, 0.0));
            break;
        }
        case pde::DomainKind::EquidistantHalfPlane:
        case pde::DomainKind::Custom: {
            const bool bumped = kind == pde::DomainKind::Custom;
            cc.domain = equidistant(p, [profile](double x, double y) { return profile->value(std::asinh(x / y)); },
                                    bumped);
            const geo::Geodesic axis(geo::Point::half_space({0.0, 1.0}), vec2(0.0, 1.0));
            cc.stabilizer = bumped ? geo::reflection(geo::Hyperplane::orthogonal_to(axis, 0.0))
                                   : geo::hyperbolic_translation(axis, 0.2);
            cc.axis = axis;
            break;
        }
    }
    return cc;
}

std::shared_ptr<pde::DomainSpec2D> disk_interior(double cx, double cy, double R) {
    if (!(R > 0.0) || !(cy > 0.0)) throw InvalidInput("disk_interior: bad disk");
    auto d = std::make_shared<pde::DomainSpec2D>();
    d->kind = pde::DomainKind::Custom;
    d->name = "disk_interior";
    d->boundary = [=](double x, double y) { return R - chart_distance(x, y, cx, cy); };
    d->transversal = [=](double x, double y) { return chart_distance(x, y, cx, cy); };
    d->center = geo::Point::half_space({cx, cy});
    d->radius = R;
    const double ey = cy * std::cosh(R);
    const double er = cy * std::sinh(R);
    set_window(*d, cx - er, cx + er, ey - er, ey + er, 0.05);
    curves::SampledCurve c = circle_curve(cx, cy, R, 720);
    c.inward_side = 1;
    d->boundary_curve = std::move(c);
    return d;
}

curves::SampledCurve circle_curve(double cx, double cy, double radius, std::size_t samples) {
    if (samples < 3 || !(radius > 0.0) || !(cy > 0.0)) throw InvalidInput("circle_curve: bad parameters");
    const double ey = cy * std::cosh(radius);
    const double er = cy * std::sinh(radius);
    curves::SampledCurve c;
    c.closed = true;
    c.inward_side = -1;
    for (std::size_t k = 0; k < samples; ++k) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
        c.points.emplace_back(cx + er * std::cos(t), ey + er * std::sin(t));
    }
    return c;
}

curves::SampledCurve horocycle_curve(double height, double extent, std::size_t samples) {
    if (samples < 3 || !(height > 0.0) || !(extent > 0.0)) throw InvalidInput("horocycle_curve: bad parameters");
    curves::SampledCurve c;
    const double top = std::asinh(extent);
    for (std::size_t k = 0; k < samples; ++k) {
        const double t = -top + 2.0 * top * static_cast<double>(k) / static_cast<double>(samples - 1);
        c.points.emplace_back(std::sinh(t), height);
    }
    c.inward_side = 1;
    return c;
}

curves::SampledCurve equidistant_curve(double offset, double extent, std::size_t samples) {
    if (samples < 3 || !(extent > 0.0)) throw InvalidInput("equidistant_curve: bad parameters");
    curves::SampledCurve c;
    for (std::size_t k = 0; k < samples; ++k) {
        const double tau = -extent + 2.0 * extent * static_cast<double>(k) / static_cast<double>(samples - 1);
        const double r = std::exp(tau);
        c.points.emplace_back(r * std::tanh(offset), r / std::cosh(offset));
    }
    c.inward_side = -1;
    return c;
}

}  // namespace hyperoep::fixtures

#include "hyperoep/curves.hpp"

#include "hyperoep/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hyperoep::curves {

namespace {

using Vec3 = Eigen::Vector3d;

constexpr double kRayOffset = 0.5;
constexpr double kRayStep = 0.05;
constexpr double kIdealTailTol = 1e-3;
constexpr double kClusterTol = 1e-2;

Vec3 lift(const Vec2& p) {
    const double q = p.squaredNorm();
    const double y = p.y();
    return {p.x() / y, (1.0 - q) / (2.0 * y), (1.0 + q) / (2.0 * y)};
}

double lorentz(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] - a[2] * b[2]; }

double hyperboloid_distance(const Vec3& a, const Vec3& b) {
    const Vec3 d = a - b;
    return 2.0 * std::asinh(0.5 * std::sqrt(std::max(0.0, lorentz(d, d))));
}

Vec2 to_ball(const Vec3& x) { return {x[0] / (1.0 + x[2]), x[1] / (1.0 + x[2])}; }

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

void check_chart(const SampledCurve& c) {
    for (const Vec2& p : c.points) {
        if (!(p.y() > 0.0) || !std::isfinite(p.x())) throw InvalidInput("curve: sample outside the half-plane chart");
    }
}

std::size_t segment_count(const SampledCurve& c) { return c.closed ? c.size() : c.size() - 1; }

}  // namespace

std::string to_string(CurveClass c) {
    switch (c) {
        case CurveClass::Circle: return "circle";
        case CurveClass::Horocycle: return "horocycle";
        case CurveClass::EquidistantOrGeodesic: return "equidistant_or_geodesic";
    }
    return "?";
}

bool self_intersects(const SampledCurve& c) {
    const std::size_t m = segment_count(c);
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2& a = c.points[i];
        const Vec2& b = c.points[(i + 1) % n];
        const Vec2 lo = a.cwiseMin(b);
        const Vec2 hi = a.cwiseMax(b);
        for (std::size_t j = i + 2; j < m; ++j) {
            if (c.closed && i == 0 && j == m - 1) continue;
            const Vec2& p = c.points[j];
            const Vec2& q = c.points[(j + 1) % n];
            if (std::max(p.x(), q.x()) < lo.x() || std::min(p.x(), q.x()) > hi.x() ||
                std::max(p.y(), q.y()) < lo.y() || std::min(p.y(), q.y()) > hi.y()) {
                continue;
            }
            if (segments_intersect(a, b, p, q)) return true;
        }
    }
    return false;
}

CurvatureReport geodesic_curvature(const SampledCurve& c, double class_tol) {
    if (c.size() < 5) throw InvalidInput("geodesic_curvature: need at least 5 samples");
    check_chart(c);
    if (self_intersects(c)) throw InvalidInput("geodesic_curvature: curve self-intersects");

    CurvatureReport r;
    const std::size_t n = c.size();
    const std::size_t first = c.closed ? 0 : 1;
    const std::size_t last = c.closed ? n : n - 1;
    double lo = INFINITY;
    double hi = -INFINITY;
    double acc = 0.0;
    for (std::size_t i = first; i < last; ++i) {
        const Vec2& a = c.points[(i + n - 1) % n];
        const Vec2& b = c.points[i];
        const Vec2& d = c.points[(i + 1) % n];
        const Vec2 ab = b - a;
        const Vec2 bd = d - b;
        const Vec2 ad = d - a;
        const double kappa = 2.0 * cross(ab, bd) / (ab.norm() * bd.norm() * ad.norm());
        const double normal_y = ad.x() / ad.norm();  // y-component of the left normal
        const double kg = b.y() * kappa + normal_y;
        r.kg.push_back(kg);
        lo = std::min(lo, kg);
        hi = std::max(hi, kg);
        acc += std::abs(kg);
    }
    r.mean_abs = acc / static_cast<double>(r.kg.size());
    r.spread = hi - lo;
    if (r.mean_abs > 1.0 + class_tol) {
        r.classification = CurveClass::Circle;
    } else if (std::abs(r.mean_abs - 1.0) <= class_tol) {
        r.classification = CurveClass::Horocycle;
    } else {
        r.classification = CurveClass::EquidistantOrGeodesic;
    }
    return r;
}

NormalRayReport normal_ideal_endpoint(const SampledCurve& c, std::size_t index) {
    if (c.size() < 3) throw InvalidInput("normal_ideal_endpoint: need at least 3 samples");
    if (index >= c.size()) throw InvalidInput("normal_ideal_endpoint: sample index out of range");
    if (c.inward_side != 1 && c.inward_side != -1) throw InvalidInput("normal_ideal_endpoint: inward side must be +-1");
    check_chart(c);
    const std::size_t n = c.size();
    std::size_t prev = index == 0 ? (c.closed ? n - 1 : 0) : index - 1;
    std::size_t next = index + 1 == n ? (c.closed ? 0 : index) : index + 1;
    const Vec2 tangent = c.points[next] - c.points[prev];
    const Vec2 left = Vec2(-tangent.y(), tangent.x()).normalized();
    const Vec2& p = c.points[index];
    const Vec2 inward = c.inward_side * left * p.y();

    const geo::Point base = geo::Point::half_space({p.x(), p.y()});
    geo::Vec v(2);
    v << inward.x(), inward.y();
    const geo::Geodesic ray(base, v);

    NormalRayReport rep{ray.forward_end(), 0.0, false, 0.0};

    std::vector<Vec3> lifted;
    std::vector<Vec2> ball;
    lifted.reserve(n);
    ball.reserve(n);
    for (const Vec2& q : c.points) {
        lifted.push_back(lift(q));
        ball.push_back(to_ball(lifted.back()));
    }
    auto ray_point = [&](double t) {
        const geo::Vec x = ray.lorentz_point_at(t);
        return Vec3(x[0], x[1], x[2]);
    };

    // Segments touching the start sample are excluded from crossing tests.
    auto adjacent = [&](std::size_t seg) {
        const std::size_t a = seg;
        const std::size_t b = (seg + 1) % n;
        return a == index || b == index;
    };

    for (double window : {10.0, 20.0, 30.0}) {
        double best = INFINITY;
        double best_t = kRayOffset;
        bool crossed = false;
        Vec2 prev_ball = to_ball(ray_point(0.0));
        for (double t = kRayStep; t <= window + 1e-12; t += kRayStep) {
            const Vec3 x = ray_point(t);
            const Vec2 xb = to_ball(x);
            for (std::size_t s = 0; s < segment_count(c) && !crossed; ++s) {
                if (adjacent(s)) continue;
                if (segments_intersect(prev_ball, xb, ball[s], ball[(s + 1) % n])) crossed = true;
            }
            prev_ball = xb;
            if (t + 1e-12 < kRayOffset) continue;
            for (const Vec3& q : lifted) {
                const double d = hyperboloid_distance(x, q);
                if (d < best) {
                    best = d;
                    best_t = t;
                }
            }
        }
        rep.window = window;
        if (crossed) {
            rep.ray_clearance = -best;
            return rep;
        }
        rep.ray_clearance = best;
        if (best_t < window - kRayStep) return rep;
    }
    rep.inconclusive = true;
    return rep;
}

IdealTraceReport ideal_boundary_trace(const std::vector<SampledCurve>& components) {
    IdealTraceReport rep;
    std::vector<Vec2> tails;
    for (const SampledCurve& c : components) {
        if (c.closed) continue;
        if (c.size() < 2) throw InvalidInput("ideal_boundary_trace: open curve needs at least 2 samples");
        check_chart(c);
        for (const Vec2* end : {&c.points.front(), &c.points.back()}) {
            const Vec2 b = to_ball(lift(*end));
            if (1.0 - b.norm() >= kIdealTailTol) {
                rep.inconclusive = true;
                std::ostringstream os;
                os << "tail at (" << end->x() << ", " << end->y() << ") stays " << 1.0 - b.norm()
                   << " away from the ideal boundary";
                rep.note = os.str();
                continue;
            }
            tails.push_back(b.normalized());
        }
    }
    std::vector<Vec2> clusters;
    for (const Vec2& t : tails) {
        const bool merged = std::any_of(clusters.begin(), clusters.end(),
                                        [&](const Vec2& q) { return (q - t).norm() < kClusterTol; });
        if (!merged) clusters.push_back(t);
    }
    for (const Vec2& q : clusters) {
        geo::Vec b(2);
        b << q.x(), q.y();
        rep.points.emplace_back(b);
    }
    if (rep.points.size() > 2) {
        rep.violation = true;
        rep.note = "more than two ideal accumulation points";
    }
    return rep;
}

IdealTraceReport ideal_boundary_trace(const SampledCurve& curve) {
    return ideal_boundary_trace(std::vector<SampledCurve>{curve});
}

double hyperbolic_length(const SampledCurve& c) {
    check_chart(c);
    double len = 0.0;
    for (std::size_t i = 0; i < segment_count(c); ++i) {
        len += hyperboloid_distance(lift(c.points[i]), lift(c.points[(i + 1) % c.size()]));
    }
    return len;
}

}  // namespace hyperoep::curves

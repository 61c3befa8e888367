#include "hyperoep/selftest.hpp"

#include "hyperoep/errors.hpp"
#include "hyperoep/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

namespace hyperoep::selftest {

namespace {

using geo::Isometry;
using geo::Mat;
using geo::Model;
using geo::Point;
using geo::Vec;

constexpr const char* kReflectionFault = "reflection-matrix";

struct Gen {
    std::mt19937_64 rng;
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif{0.0, 1.0};

    explicit Gen(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) { return lo + (hi - lo) * unif(rng); }

    Vec unit(int n) {
        Vec v(n);
        do {
            for (int i = 0; i < n; ++i) v[i] = gauss(rng);
        } while (v.norm() < 1e-8);
        return v.normalized();
    }

    // Uniform in the hyperbolic ball of the given radius about the origin,
    // emitted in a random chart.
    Point point(int n, double radius = 3.0) {
        const double r = radius * std::pow(unif(rng), 1.0 / n);
        const Point p(Model::Ball, std::tanh(r / 2.0) * unit(n));
        return unif(rng) < 0.5 ? p : geo::convert_model(p);
    }

    Vec tangent(const Point& p) {
        const Vec v = unit(p.dim());
        return v / geo::metric_norm(p, v);
    }

    geo::IdealPoint ideal(int n) { return geo::IdealPoint(unit(n)); }

    // Translation composed with a reflection; moves the origin by at most
    // about 2 * radius + max_shift.
    Isometry isometry(int n, double radius = 1.0, double max_shift = 1.0) {
        const Point p = point(n, radius);
        const geo::Geodesic g(p, tangent(p));
        const Point q = point(n, radius);
        return geo::hyperbolic_translation(g, uniform(-max_shift, max_shift)) *
               geo::reflection(geo::Hyperplane(q, tangent(q)));
    }
};

double gap(const Point& a, const Point& b) {
    return (geo::to_model(a, Model::Ball).coords() - geo::to_model(b, Model::Ball).coords()).cwiseAbs().maxCoeff();
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

struct Property {
    std::string name;
    double tolerance;
    // Returns the measured error of one random case in dimension n.
    std::function<double(Gen&, int)> measure;
};

std::vector<Property> properties(bool corrupt_reflection) {
    std::vector<Property> out;

    out.push_back({"chart_round_trip", 1e-12, [](Gen& g, int n) {
                       const Point p = g.point(n);
                       return gap(geo::convert_model(geo::convert_model(p)), p);
                   }});

    out.push_back({"distance_chart_independent", 1e-9, [](Gen& g, int n) {
                       const Point p = g.point(n);
                       const Point q = g.point(n);
                       const double d = geo::distance(p, q);
                       return std::abs(geo::distance(geo::convert_model(p), geo::convert_model(q)) - d) /
                              std::max(1.0, d);
                   }});

    out.push_back({"group_identity", 1e-10, [](Gen& g, int n) {
                       const Isometry a = g.isometry(n);
                       return max_abs((a * a.inverse()).matrix() - Mat::Identity(n + 1, n + 1));
                   }});

    out.push_back({"group_associativity", 1e-10, [](Gen& g, int n) {
                       const Isometry a = g.isometry(n);
                       const Isometry b = g.isometry(n);
                       const Isometry c = g.isometry(n);
                       const Mat lhs = ((a * b) * c).matrix();
                       return max_abs(lhs - (a * (b * c)).matrix()) / max_abs(lhs);
                   }});

    out.push_back({"isometry_preserves_distance", 1e-9, [](Gen& g, int n) {
                       const Isometry a = g.isometry(n);
                       const Point p = g.point(n);
                       const Point q = g.point(n);
                       return std::abs(geo::distance(a.apply(p), a.apply(q)) - geo::distance(p, q));
                   }});

    out.push_back({"reflection_involution", 1e-9, [corrupt_reflection](Gen& g, int n) {
                       const Point base = g.point(n);
                       Isometry r = geo::reflection(geo::Hyperplane(base, g.tangent(base)));
                       if (corrupt_reflection) {
                           Mat m = r.matrix();
                           m(0, 1) += 1e-3;
                           r = Isometry::unchecked(m);
                       }
                       const Point p = g.point(n);
                       return gap(r.apply(r.apply(p)), p);
                   }});

    out.push_back({"translation_as_two_reflections", 1e-9, [](Gen& g, int n) {
                       const Point base = g.point(n);
                       const geo::Geodesic line(base, g.tangent(base));
                       const double t = g.uniform(-2.0, 2.0);
                       const Isometry l = geo::hyperbolic_translation(line, t);
                       const Isometry rr = geo::reflection(geo::Hyperplane::orthogonal_to(line, 0.0)) *
                                           geo::reflection(geo::Hyperplane::orthogonal_to(line, -t / 2.0));
                       const Point p = g.point(n);
                       return gap(l.apply(p), rr.apply(p));
                   }});

    out.push_back({"parabolic_as_two_reflections", 1e-9, [](Gen& g, int n) {
                       // Vertical hyperplanes <x, e> = a and <x, e> = b of the
                       // half-space share only the point at infinity.
                       Vec e = Vec::Zero(n);
                       e.head(n - 1) = g.unit(n - 1);
                       const double a = g.uniform(-1.0, 1.0);
                       const double b = g.uniform(-1.0, 1.0);
                       Vec pa = Vec::Zero(n);
                       Vec pb = Vec::Zero(n);
                       pa.head(n - 1) = a * e.head(n - 1);
                       pb.head(n - 1) = b * e.head(n - 1);
                       pa[n - 1] = 1.0;
                       pb[n - 1] = 1.0;
                       const Isometry r1 = geo::reflection(geo::Hyperplane(Point(Model::HalfSpace, pa), e));
                       const Isometry r2 = geo::reflection(geo::Hyperplane(Point(Model::HalfSpace, pb), e));
                       const Isometry expected = geo::parabolic_translation(geo::IdealPoint::half_space_infinity(n),
                                                                            2.0 * (a - b) * e.head(n - 1));
                       const Point p = g.point(n);
                       return gap((r1 * r2).apply(p), expected.apply(p));
                   }});

    out.push_back({"busemann_gradient_unit", 1e-5, [](Gen& g, int n) {
                       const geo::IdealPoint x = g.ideal(n);
                       const Point ref = g.point(n);
                       const Point p = geo::to_model(g.point(n, 2.0), Model::Ball);
                       const double step = 1e-4;
                       Vec grad(n);
                       for (int i = 0; i < n; ++i) {
                           Vec dp = p.coords();
                           Vec dm = p.coords();
                           dp[i] += step;
                           dm[i] -= step;
                           grad[i] = (geo::busemann(x, ref, Point(Model::Ball, dp)) -
                                      geo::busemann(x, ref, Point(Model::Ball, dm))) /
                                     (2.0 * step);
                       }
                       return std::abs(grad.norm() / geo::conformal_factor(p) - 1.0);
                   }});

    out.push_back({"busemann_unit_rate_along_ray", 1e-9, [](Gen& g, int n) {
                       const geo::IdealPoint x = g.ideal(n);
                       const Point ref = g.point(n);
                       const double t = g.uniform(0.0, 4.0);
                       const Point ahead = geo::exp_map(ref, geo::direction_to(ref, x), t);
                       return std::abs(geo::busemann(x, ref, ahead) + t);
                   }});

    out.push_back({"composition_chain_drift", geo::kMaxDrift, [](Gen& g, int n) {
                       Isometry chain = Isometry::identity(n);
                       double worst = 0.0;
                       // Short steps: drift is bounded below by roughly
                       // eps * exp(2 * displacement), so an unbounded walk
                       // fails for conditioning reasons alone.
                       for (int k = 0; k < 20; ++k) {
                           chain = chain * g.isometry(n, 0.25, 0.5);
                           worst = std::max(worst, chain.lorentz_drift());
                       }
                       return worst;
                   }});

    return out;
}

}  // namespace

std::vector<std::string> fault_names() { return {kReflectionFault}; }

std::vector<PropertyResult> run_geometry_suite(const Options& options) {
    if (options.cases < 1) throw InvalidInput("selftest: cases must be positive");
    const bool corrupt = options.inject_fault == kReflectionFault;
    if (!options.inject_fault.empty() && !corrupt) {
        throw InvalidInput("selftest: unknown fault '" + options.inject_fault + "'");
    }

    std::vector<PropertyResult> results;
    std::uint64_t stream = 0;
    for (const Property& prop : properties(corrupt)) {
        // Independent stream per property so adding one does not shift the others.
        Gen gen(options.seed * 0x9E3779B97F4A7C15ULL + (++stream));
        PropertyResult res;
        res.name = prop.name;
        res.tolerance = prop.tolerance;
        for (int k = 0; k < options.cases; ++k) {
            const int n = 2 + k % 3;
            double err = 0.0;
            std::string what;
            try {
                err = prop.measure(gen, n);
            } catch (const std::exception& e) {
                err = std::numeric_limits<double>::infinity();
                what = e.what();
            }
            ++res.cases;
            if (!(err <= prop.tolerance)) {
                ++res.failures;
                if (res.first_failure.empty()) {
                    std::ostringstream os;
                    os << "case " << k << " (n=" << n << "): error " << err;
                    if (!what.empty()) os << " [" << what << "]";
                    res.first_failure = os.str();
                }
            }
            if (std::isnan(err) || err > res.worst) res.worst = err;
        }
        results.push_back(std::move(res));
    }
    return results;
}

std::string format_table(const std::vector<PropertyResult>& results) {
    std::ostringstream os;
    os << "property                        cases  failures  worst        tolerance  status\n";
    for (const PropertyResult& r : results) {
        char line[160];
        std::snprintf(line, sizeof line, "%-30s %6d  %8d  %-11.3e  %-9.1e  %s\n", r.name.c_str(), r.cases,
                      r.failures, r.worst, r.tolerance, r.passed() ? "PASS" : "FAIL");
        os << line;
        if (!r.passed()) os << "    first failure: " << r.first_failure << '\n';
    }
    return os.str();
}

bool all_passed(const std::vector<PropertyResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed(); });
}

}  // namespace hyperoep::selftest

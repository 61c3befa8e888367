#pragma once

#include "hyperoep/geometry.hpp"

#include <cmath>
#include <random>

namespace hyperoep::testing {

/// Random point with hyperbolic distance at most `radius` from the ball origin,
/// emitted in either chart.
inline geo::Point random_point(std::mt19937_64& rng, int n, double radius = 3.0,
                               geo::Model model = geo::Model::Ball) {
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    geo::Vec dir(n);
    for (int i = 0; i < n; ++i) dir[i] = gauss(rng);
    dir.normalize();
    const double r = radius * std::pow(unif(rng), 1.0 / n);
    geo::Point p(geo::Model::Ball, std::tanh(r / 2.0) * dir);
    return model == geo::Model::Ball ? p : geo::convert_model(p);
}

inline geo::Vec random_unit_tangent(std::mt19937_64& rng, const geo::Point& p) {
    std::normal_distribution<double> gauss;
    geo::Vec v(p.dim());
    for (int i = 0; i < p.dim(); ++i) v[i] = gauss(rng);
    return v / geo::metric_norm(p, v);
}

inline geo::IdealPoint random_ideal(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss;
    geo::Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = gauss(rng);
    return geo::IdealPoint(v);
}

inline double point_gap(const geo::Point& a, const geo::Point& b) {
    return (geo::to_model(a, geo::Model::Ball).coords() - geo::to_model(b, geo::Model::Ball).coords())
        .cwiseAbs()
        .maxCoeff();
}

}  // namespace hyperoep::testing

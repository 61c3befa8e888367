#include "hyperoep/nonlinearity.hpp"

#include "hyperoep/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>

namespace hyperoep {

namespace {

constexpr double kMonotoneSlack = 1e-12;

}  // namespace

Nonlinearity::Nonlinearity(Fn f, double lipschitz_bound, bool nonincreasing, std::vector<double> roots_hint,
                           Fn derivative, std::string description)
    : f_(std::move(f)),
      df_(std::move(derivative)),
      lipschitz_(lipschitz_bound),
      nonincreasing_(nonincreasing),
      roots_(std::move(roots_hint)),
      description_(std::move(description)) {
    if (!f_) throw InvalidInput("Nonlinearity: empty evaluator");
    if (!(lipschitz_ >= 0.0) || !std::isfinite(lipschitz_)) {
        throw InvalidInput("Nonlinearity: lipschitz_bound must be finite and >= 0");
    }
}

Nonlinearity Nonlinearity::linear(double slope, double root) {
    if (!std::isfinite(slope) || !std::isfinite(root)) throw InvalidInput("linear nonlinearity: non-finite parameter");
    std::ostringstream os;
    os << "linear(slope=" << slope << ", root=" << root << ")";
    return Nonlinearity([=](double u) { return slope * (root - u); }, std::abs(slope), slope >= 0.0, {root},
                        [=](double) { return -slope; }, os.str());
}

Nonlinearity Nonlinearity::zero() {
    return Nonlinearity([](double) { return 0.0; }, 0.0, true, {}, [](double) { return 0.0; }, "zero");
}

Nonlinearity Nonlinearity::cubic() {
    return Nonlinearity([](double u) { return u - u * u * u; }, 11.0, false, {-1.0, 0.0, 1.0},
                        [](double u) { return 1.0 - 3.0 * u * u; }, "cubic");
}

Nonlinearity Nonlinearity::table(std::vector<double> u, std::vector<double> f) {
    if (u.size() != f.size() || u.size() < 2) {
        throw InvalidInput("table nonlinearity: need matching arrays with at least two knots");
    }
    double lip = 0.0;
    bool nonincreasing = true;
    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        if (!(u[i + 1] > u[i])) throw InvalidInput("table nonlinearity: knots must be strictly increasing");
        const double slope = (f[i + 1] - f[i]) / (u[i + 1] - u[i]);
        lip = std::max(lip, std::abs(slope));
        nonincreasing = nonincreasing && slope <= kMonotoneSlack;
        if (f[i] == 0.0) roots.push_back(u[i]);
        if (f[i] * f[i + 1] < 0.0) roots.push_back(u[i] - f[i] / slope);
    }
    if (f.back() == 0.0) roots.push_back(u.back());

    auto eval = [u, f](double x) {
        auto it = std::upper_bound(u.begin(), u.end(), x);
        std::size_t i = static_cast<std::size_t>(std::distance(u.begin(), it));
        i = std::clamp<std::size_t>(i, 1, u.size() - 1);
        const double w = (x - u[i - 1]) / (u[i] - u[i - 1]);
        return f[i - 1] + w * (f[i] - f[i - 1]);
    };
    auto deriv = [u, f](double x) {
        auto it = std::upper_bound(u.begin(), u.end(), x);
        std::size_t i = static_cast<std::size_t>(std::distance(u.begin(), it));
        i = std::clamp<std::size_t>(i, 1, u.size() - 1);
        return (f[i] - f[i - 1]) / (u[i] - u[i - 1]);
    };
    return Nonlinearity(eval, lip, nonincreasing, std::move(roots), deriv, "table");
}

double Nonlinearity::derivative(double u) const {
    if (df_) return df_(u);
    const double h = 1e-6 * std::max(1.0, std::abs(u));
    return (f_(u + h) - f_(u - h)) / (2.0 * h);
}

Nonlinearity::SlopeReport Nonlinearity::sample_slopes(double lo, double hi, int samples) const {
    if (!(hi > lo) || samples < 2) throw InvalidInput("sample_slopes: empty lattice");
    SlopeReport r;
    r.min_slope = INFINITY;
    r.max_slope = -INFINITY;
    const double step = (hi - lo) / (samples - 1);
    double prev = f_(lo);
    for (int i = 1; i < samples; ++i) {
        const double cur = f_(lo + i * step);
        const double slope = (cur - prev) / step;
        r.min_slope = std::min(r.min_slope, slope);
        r.max_slope = std::max(r.max_slope, slope);
        prev = cur;
    }
    const double bound = lipschitz_ * (1.0 + 1e-9) + kMonotoneSlack;
    r.lipschitz_ok = std::max(std::abs(r.min_slope), std::abs(r.max_slope)) <= bound;
    r.monotone_ok = !nonincreasing_ || r.max_slope <= kMonotoneSlack;
    return r;
}

void Nonlinearity::validate(double lo, double hi) const {
    const SlopeReport r = sample_slopes(lo, hi);
    if (!r.lipschitz_ok) {
        std::ostringstream os;
        os << "nonlinearity '" << description_ << "': sampled slope magnitude "
           << std::max(std::abs(r.min_slope), std::abs(r.max_slope)) << " exceeds lipschitz_bound " << lipschitz_;
        throw InvalidInput(os.str());
    }
    if (!r.monotone_ok) {
        std::ostringstream os;
        os << "nonlinearity '" << description_ << "': declared nonincreasing but sampled slope " << r.max_slope
           << " > 0";
        throw InvalidInput(os.str());
    }
}

}  // namespace hyperoep

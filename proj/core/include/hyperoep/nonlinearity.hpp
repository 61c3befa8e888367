#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hyperoep {

/// The reaction term f in  Delta u + f(u) = 0  together with the hypotheses a
/// caller has declared about it (Lipschitz bound, monotonicity, known roots).
class Nonlinearity {
public:
    using Fn = std::function<double(double)>;

    Nonlinearity(Fn f, double lipschitz_bound, bool nonincreasing, std::vector<double> roots_hint = {},
                 Fn derivative = {}, std::string description = "custom");

    /// f(u) = slope * (root - u)
    static Nonlinearity linear(double slope, double root);
    static Nonlinearity zero();
    /// f(u) = u - u^3, root 1. Lipschitz bound is taken on [-1, 2].
    static Nonlinearity cubic();
    /// Piecewise-linear interpolant of (u_i, f_i), extended linearly past the
    /// end nodes. Knots must be strictly increasing.
    static Nonlinearity table(std::vector<double> u, std::vector<double> f);

    double operator()(double u) const { return f_(u); }
    /// Analytic derivative when known, else a central difference.
    double derivative(double u) const;

    double lipschitz_bound() const { return lipschitz_; }
    bool nonincreasing() const { return nonincreasing_; }
    const std::vector<double>& roots_hint() const { return roots_; }
    const std::string& description() const { return description_; }

    struct SlopeReport {
        double min_slope = 0.0;
        double max_slope = 0.0;
        bool lipschitz_ok = true;
        bool monotone_ok = true;
    };
    /// Samples difference quotients on a uniform lattice of [lo, hi].
    SlopeReport sample_slopes(double lo, double hi, int samples = 513) const;
    /// Throws InvalidInput if the sampled slopes contradict the declared
    /// hypotheses.
    void validate(double lo, double hi) const;

private:
    Fn f_;
    Fn df_;
    double lipschitz_;
    bool nonincreasing_;
    std::vector<double> roots_;
    std::string description_;
};

}  // namespace hyperoep

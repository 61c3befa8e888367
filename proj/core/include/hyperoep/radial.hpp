#pragma once

// One-dimensional reductions of  Delta u + f(u) = 0  for solutions that depend
// only on the distance s to a ball centre, a horosphere or a totally geodesic
// hyperplane:
//
//     u'' + a(s) u' + f(u) = 0,   a(s) = (n-1) coth s      (ball exterior, s > R)
//                                        -(n-1)            (horoball family, s > 0)
//                                        (n-1) tanh s      (equidistant, s > c)
//
// with u = 0 at the boundary and u -> C, f(C) = 0, as s -> infinity. The
// Neumann constant is alpha = -u'(s0) (outward normal points toward smaller s).

#include "hyperoep/nonlinearity.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperoep::radial {

enum class Family { BallExterior, HoroballExterior, EquidistantHalfSpace };

std::string_view to_string(Family family);
/// Accepts "ball_exterior", "horoball_exterior", "equidistant_half_space".
Family family_from_string(std::string_view name);

/// Deviation of u from C accepted at the end of a returned profile.
inline constexpr double kTailTolerance = 1e-8;
/// Largest unstable-mode amplitude (relative to max(1, C)) at the stitch
/// point for which a shot counts as converged.
inline constexpr double kMatchTolerance = 1e-6;

struct RadialProblem {
    Family family = Family::HoroballExterior;
    int n = 2;
    /// Ball radius R, horosphere level (must be 0) or equidistant offset c.
    double domain_param = 0.0;
    Nonlinearity f = Nonlinearity::zero();
    double C = 1.0;

    /// Boundary value of s: R, 0 or c.
    double s0() const;
    /// Throws InvalidInput on a malformed problem.
    void validate() const;
};

enum class Status { Converged, NotConverged, NoBracket, Diverged };
std::string_view to_string(Status status);

struct RadialSolution {
    std::vector<double> s;
    std::vector<double> u;
    std::vector<double> du;
    double alpha = 0.0;
    bool converged = false;
    double residual = 0.0;

    Status status = Status::NotConverged;
    /// Set when u left [-C/2, 2C]; escape_s is where it happened.
    bool diverged = false;
    double escape_s = 0.0;
    /// Beyond this point the profile is the linearized stable tail.
    double stitch_s = 0.0;
    double limit = 0.0;
    double decay_rate = 0.0;
    std::string message;

    /// Cubic Hermite interpolation of (u, u'); past the last node the stable
    /// tail C + (u_end - C) exp(decay_rate (s - s_end)) is used.
    std::pair<double, double> sample(double at) const;
    double value(double at) const { return sample(at).first; }
};

double ode_coefficient(Family family, int n, double s);
/// u'' = -a(s) u' - f(u). Throws SingularityError for the ball family at s <= 0.
double radial_ode_rhs(Family family, int n, double s, double u, double du, const Nonlinearity& f);
/// lim a(s) as s -> infinity.
double limit_coefficient(Family family, int n);
/// Negative characteristic root of the equation linearized at u = C.
double decay_rate(const RadialProblem& problem);
/// max(10, 5/|decay_rate|), capped at 200.
double truncation_length(const RadialProblem& problem);

struct IntegrateOptions {
    /// Output nodes; empty means a uniform grid with spacing <= 0.01.
    std::vector<double> grid;
    /// Stop when u leaves [escape_low * C, escape_high * C].
    double escape_low = -0.5;
    double escape_high = 2.0;
    bool detect_escape = true;
};

RadialSolution integrate(const RadialProblem& problem, double u0, double du0, std::pair<double, double> s_span,
                         double tol, const IntegrateOptions& options = {});

/// Shooting on the initial slope for the solution on the stable manifold of C.
RadialSolution shoot(const RadialProblem& problem, double tol);

/// Two-point problem u(s0) = 0, u(s0 + depth) = C. Used as the reference
/// profile on truncated domains.
RadialSolution solve_truncated(const RadialProblem& problem, double depth, double tol);

enum class ClosedForm { HoroballLinear, BallHarmonic };

struct ClosedFormParams {
    int n = 2;
    double C = 1.0;
    /// Slope k of f(u) = k (C - u) for the horoball case.
    double slope = 1.0;
    /// Ball radius for the harmonic case.
    double R = 1.0;
};

/// Horoball family with linear f: u = C (1 - exp(mu s)), mu the negative root
/// of mu^2 - (n-1) mu - k = 0. Ball exterior with f = 0 (n = 2, 3): the
/// bounded radial harmonic function vanishing at R.
RadialSolution closed_form_reference(ClosedForm which, const ClosedFormParams& params,
                                     const std::vector<double>& grid);

struct OverdeterminedReport {
    bool found = false;
    double domain_param = 0.0;
    double C = 0.0;
    double alpha = 0.0;
    /// Range of alpha seen while scanning the domain parameter.
    double alpha_min = 0.0;
    double alpha_max = 0.0;
    RadialSolution profile;
    std::string message;
};

/// Finds the domain parameter whose shot has Neumann constant target_alpha.
/// The horoball family has no free parameter; the report then says whether
/// the unique alpha matches within tol. C defaults to the smallest positive
/// declared root of f.
OverdeterminedReport solve_overdetermined(Family family, int n, const Nonlinearity& f, double target_alpha,
                                          double tol, std::optional<double> C = std::nullopt);

}  // namespace hyperoep::radial

#include "hyperoep/radial.hpp"

#include "hyperoep/errors.hpp"

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace hyperoep::radial {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<double, 2>;

constexpr double kGridSpacing = 0.01;
constexpr double kMaxTruncation = 200.0;

struct Trajectory {
    std::vector<double> s, u, du;
    bool escaped = false;
    double end_s = 0.0;
    double end_u = 0.0;
    double end_du = 0.0;
};

std::vector<double> uniform_grid(double a, double b, double spacing) {
    const int cells = std::max(1, static_cast<int>(std::ceil((b - a) / spacing - 1e-9)));
    std::vector<double> g(static_cast<std::size_t>(cells) + 1);
    for (int i = 0; i <= cells; ++i) g[static_cast<std::size_t>(i)] = a + (b - a) * i / cells;
    return g;
}

// Forward integration on [a, b]; records dense output at the nodes of `grid`
// lying in [a, b] and stops at the first escape from [lo, hi].
Trajectory run(const RadialProblem& pr, double u0, double du0, double a, double b, double tol,
               const std::vector<double>& grid, bool detect_escape, double lo, double hi) {
    auto rhs = [&pr](const State& x, State& dxdt, double s) {
        dxdt[0] = x[1];
        dxdt[1] = radial_ode_rhs(pr.family, pr.n, s, x[0], x[1], pr.f);
    };
    auto outside = [&](const State& x) { return detect_escape && (x[0] < lo || x[0] > hi); };

    Trajectory tr;
    auto stepper = odeint::make_dense_output(tol, tol, odeint::runge_kutta_dopri5<State>());
    stepper.initialize(State{u0, du0}, a, std::min(1e-3, (b - a) / 16.0));

    auto next = std::lower_bound(grid.begin(), grid.end(), a);
    auto emit_until = [&](double t_hi) {
        State x;
        for (; next != grid.end() && *next <= t_hi && *next <= b; ++next) {
            if (*next == a) {
                x = State{u0, du0};
            } else {
                stepper.calc_state(*next, x);
            }
            tr.s.push_back(*next);
            tr.u.push_back(x[0]);
            tr.du.push_back(x[1]);
        }
    };

    State x{u0, du0};
    double t = a;
    while (t < b) {
        std::pair<double, double> span;
        try {
            span = stepper.do_step(rhs);
        } catch (const odeint::odeint_error& e) {
            throw StiffnessError(std::string("radial integration: ") + e.what());
        }
        const double dt = span.second - span.first;
        if (!(dt > 1e-12 * (1.0 + std::abs(span.second)))) {
            std::ostringstream os;
            os << "radial integration: step size underflow at s = " << span.first;
            throw StiffnessError(os.str());
        }
        const double t_end = std::min(span.second, b);
        stepper.calc_state(t_end, x);
        if (!std::isfinite(x[0]) || !std::isfinite(x[1])) {
            throw StiffnessError("radial integration: non-finite state");
        }
        if (outside(x)) {
            double l = span.first;
            double r = t_end;
            State probe;
            for (int it = 0; it < 60; ++it) {
                const double m = 0.5 * (l + r);
                stepper.calc_state(m, probe);
                (outside(probe) ? r : l) = m;
            }
            stepper.calc_state(r, x);
            emit_until(l);
            tr.escaped = true;
            t = r;
            break;
        }
        emit_until(t_end);
        t = t_end;
    }
    tr.end_s = t;
    tr.end_u = x[0];
    tr.end_du = x[1];
    return tr;
}

void require_positive_tol(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidInput("tolerance must be positive");
}

double stable_residual(double mu, double C, double u, double du) { return du - mu * (u - C); }

}  // namespace

std::string_view to_string(Family family) {
    switch (family) {
        case Family::BallExterior: return "ball_exterior";
        case Family::HoroballExterior: return "horoball_exterior";
        case Family::EquidistantHalfSpace: return "equidistant_half_space";
    }
    return "?";
}

Family family_from_string(std::string_view name) {
    if (name == "ball_exterior") return Family::BallExterior;
    if (name == "horoball_exterior") return Family::HoroballExterior;
    if (name == "equidistant_half_space") return Family::EquidistantHalfSpace;
    throw InvalidInput("unknown family '" + std::string(name) + "'");
}

std::string_view to_string(Status status) {
    switch (status) {
        case Status::Converged: return "converged";
        case Status::NotConverged: return "not_converged";
        case Status::NoBracket: return "no_bracket";
        case Status::Diverged: return "diverged";
    }
    return "?";
}

double RadialProblem::s0() const {
    switch (family) {
        case Family::BallExterior: return domain_param;
        case Family::HoroballExterior: return 0.0;
        case Family::EquidistantHalfSpace: return domain_param;
    }
    return 0.0;
}

void RadialProblem::validate() const {
    if (n < 2) throw InvalidInput("radial problem: dimension must be >= 2");
    if (!std::isfinite(domain_param)) throw InvalidInput("radial problem: non-finite domain parameter");
    if (family == Family::BallExterior && !(domain_param > 0.0)) {
        throw InvalidInput("radial problem: ball radius must be > 0");
    }
    if (family == Family::HoroballExterior && domain_param != 0.0) {
        throw InvalidInput("radial problem: horosphere level must be 0 (the ODE is autonomous)");
    }
    if (!(C > 0.0) || !std::isfinite(C)) throw InvalidInput("radial problem: limit C must be > 0");
    const double fc = f(C);
    if (!(std::abs(fc) <= 1e-10)) {
        std::ostringstream os;
        os << "radial problem: f(C) = " << fc << " is not a root";
        throw InvalidInput(os.str());
    }
}

std::pair<double, double> RadialSolution::sample(double at) const {
    if (s.empty()) throw InvalidInput("RadialSolution::sample: empty profile");
    if (at < s.front() - 1e-12) throw InvalidInput("RadialSolution::sample: point before the boundary");
    if (at >= s.back()) {
        if (decay_rate < 0.0) {
            const double e = std::exp(decay_rate * (at - s.back()));
            const double w = u.back() - limit;
            return {limit + w * e, decay_rate * w * e};
        }
        return {u.back(), du.back()};
    }
    const auto it = std::upper_bound(s.begin(), s.end(), at);
    const std::size_t i = std::max<std::size_t>(1, static_cast<std::size_t>(it - s.begin())) - 1;
    const double h = s[i + 1] - s[i];
    const double t = (at - s[i]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    const double value = h00 * u[i] + h10 * h * du[i] + h01 * u[i + 1] + h11 * h * du[i + 1];
    const double d00 = (6 * t2 - 6 * t) / h;
    const double d10 = 3 * t2 - 4 * t + 1;
    const double d01 = (-6 * t2 + 6 * t) / h;
    const double d11 = 3 * t2 - 2 * t;
    const double slope = d00 * u[i] + d10 * du[i] + d01 * u[i + 1] + d11 * du[i + 1];
    return {value, slope};
}

double ode_coefficient(Family family, int n, double s) {
    const double m = n - 1;
    switch (family) {
        case Family::BallExterior:
            if (!(s > 0.0)) throw SingularityError("ball exterior ODE is singular at s <= 0");
            return m / std::tanh(s);
        case Family::HoroballExterior: return -m;
        case Family::EquidistantHalfSpace: return m * std::tanh(s);
    }
    return 0.0;
}

double radial_ode_rhs(Family family, int n, double s, double u, double du, const Nonlinearity& f) {
    return -ode_coefficient(family, n, s) * du - f(u);
}

double limit_coefficient(Family family, int n) {
    return family == Family::HoroballExterior ? -(n - 1.0) : (n - 1.0);
}

double decay_rate(const RadialProblem& problem) {
    const double a = limit_coefficient(problem.family, problem.n);
    // Slope sampled just below C: profiles approach C from below, and tabulated
    // f may have a kink at its root.
    const double h = 1e-7 * std::max(1.0, problem.C);
    const double fp = (problem.f(problem.C) - problem.f(problem.C - h)) / h;
    const double disc = a * a - 4.0 * fp;
    if (disc < 0.0) return -0.5 * a;
    return 0.5 * (-a - std::sqrt(disc));
}

double truncation_length(const RadialProblem& problem) {
    const double mu = std::abs(decay_rate(problem));
    if (mu < 5.0 / kMaxTruncation) return kMaxTruncation;
    return std::max(10.0, 5.0 / mu);
}

RadialSolution integrate(const RadialProblem& problem, double u0, double du0, std::pair<double, double> s_span,
                         double tol, const IntegrateOptions& options) {
    require_positive_tol(tol);
    const auto [a, b] = s_span;
    if (!(b > a)) throw InvalidInput("integrate: empty span");
    if (problem.family == Family::BallExterior && !(a > 0.0)) {
        throw SingularityError("integrate: ball exterior span must start at s > 0");
    }
    std::vector<double> grid = options.grid.empty() ? uniform_grid(a, b, kGridSpacing) : options.grid;
    if (!std::is_sorted(grid.begin(), grid.end())) throw InvalidInput("integrate: grid must be increasing");

    const Trajectory tr = run(problem, u0, du0, a, b, tol, grid, options.detect_escape,
                              options.escape_low * problem.C, options.escape_high * problem.C);
    RadialSolution sol;
    sol.s = tr.s;
    sol.u = tr.u;
    sol.du = tr.du;
    sol.alpha = -du0;
    sol.diverged = tr.escaped;
    sol.escape_s = tr.escaped ? tr.end_s : 0.0;
    sol.converged = !tr.escaped;
    sol.status = tr.escaped ? Status::Diverged : Status::Converged;
    sol.limit = problem.C;
    sol.stitch_s = tr.end_s;
    if (tr.escaped) {
        std::ostringstream os;
        os << "u left [" << options.escape_low * problem.C << ", " << options.escape_high * problem.C
           << "] at s = " << tr.end_s;
        sol.message = os.str();
    }
    return sol;
}

RadialSolution shoot(const RadialProblem& problem, double tol) {
    problem.validate();
    require_positive_tol(tol);
    const double C = problem.C;
    const double s0 = problem.s0();
    const double mu = decay_rate(problem);
    const double length = truncation_length(problem);
    const double se = s0 + length;

    auto shooting_value = [&](double p) {
        const Trajectory tr = run(problem, 0.0, p, s0, se, tol, {}, true, -0.5 * C, 2.0 * C);
        return stable_residual(mu, C, tr.end_u, tr.end_du);
    };

    RadialSolution out;
    out.limit = C;
    out.decay_rate = mu;

    // Slope scan: 0 plus a geometric lattice up to 10 C (1 + L).
    const double p_max = 10.0 * C * (1.0 + problem.f.lipschitz_bound());
    constexpr int kScan = 48;
    std::vector<double> ps{0.0};
    for (int k = 0; k <= kScan; ++k) ps.push_back(p_max * std::pow(10.0, -4.0 + 4.0 * k / kScan));
    std::vector<double> fs;
    fs.reserve(ps.size());
    for (double p : ps) fs.push_back(shooting_value(p));

    int first = -1;
    int sign_changes = 0;
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
        if ((fs[i] <= 0.0) != (fs[i + 1] <= 0.0)) {
            ++sign_changes;
            if (first < 0) first = static_cast<int>(i);
        }
    }
    if (first < 0) {
        std::ostringstream os;
        os << "no sign change of the shooting function for slopes in [0, " << p_max << "]";
        out.status = Status::NoBracket;
        out.message = os.str();
        out.residual = INFINITY;
        return out;
    }

    double lo = ps[static_cast<std::size_t>(first)];
    double hi = ps[static_cast<std::size_t>(first) + 1];
    double flo = fs[static_cast<std::size_t>(first)];
    double fhi = fs[static_cast<std::size_t>(first) + 1];
    if (sign_changes > 1) {
        warn("shooting function is not monotone over the slope scan; bisecting the first bracket");
        for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = shooting_value(mid);
            if ((fm <= 0.0) == (flo <= 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
                fhi = fm;
            }
        }
    } else if (flo != 0.0 && fhi != 0.0) {
        std::uintmax_t iters = 200;
        const auto bracket = boost::math::tools::toms748_solve(shooting_value, lo, hi, flo, fhi,
                                                               boost::math::tools::eps_tolerance<double>(52), iters);
        lo = bracket.first;
        hi = bracket.second;
        flo = shooting_value(lo);
        fhi = shooting_value(hi);
    }
    const double p_star = std::abs(flo) <= std::abs(fhi) ? lo : hi;

    // Profile on the forward grid, then stitch the stable tail where the
    // unstable mode is smallest.
    const Trajectory tr = run(problem, 0.0, p_star, s0, se, tol, uniform_grid(s0, se, kGridSpacing), true,
                              -0.5 * C, 2.0 * C);
    // A stitch point must sit in a stretch where the trajectory follows the
    // linearized stable manifold, not at an isolated zero of the residual, so
    // the score is the worst residual over the following unit of s.
    const std::size_t m = tr.s.size();
    std::vector<double> resid(m);
    for (std::size_t i = 0; i < m; ++i) resid[i] = std::abs(stable_residual(mu, C, tr.u[i], tr.du[i]));
    const std::size_t window = std::max<std::size_t>(2, static_cast<std::size_t>(1.0 / kGridSpacing));
    std::size_t cut = m - 1;
    double best = INFINITY;
    for (std::size_t i = 1; i + window < m; ++i) {
        double worst = 0.0;
        for (std::size_t j = i; j <= i + window; ++j) worst = std::max(worst, resid[j]);
        if (worst < best) {
            best = worst;
            cut = i;
        }
    }

    out.s.assign(tr.s.begin(), tr.s.begin() + static_cast<std::ptrdiff_t>(cut) + 1);
    out.u.assign(tr.u.begin(), tr.u.begin() + static_cast<std::ptrdiff_t>(cut) + 1);
    out.du.assign(tr.du.begin(), tr.du.begin() + static_cast<std::ptrdiff_t>(cut) + 1);
    out.stitch_s = tr.s[cut];
    const double w_cut = tr.u[cut] - C;
    double s_end = se;
    if (mu < 0.0 && std::abs(w_cut) > 0.5 * kTailTolerance) {
        s_end = std::max(se, out.stitch_s + std::log(0.5 * kTailTolerance / std::abs(w_cut)) / mu);
    }
    const int tail_cells = static_cast<int>(std::ceil((s_end - out.stitch_s) / kGridSpacing));
    for (int k = 1; k <= tail_cells; ++k) {
        const double s = out.stitch_s + (s_end - out.stitch_s) * k / tail_cells;
        const double e = mu < 0.0 ? std::exp(mu * (s - out.stitch_s)) : 1.0;
        out.s.push_back(s);
        out.u.push_back(C + w_cut * e);
        out.du.push_back(mu * w_cut * e);
    }

    out.alpha = -p_star;
    out.residual = std::abs(stable_residual(mu, C, tr.u[cut], tr.du[cut])) / std::max(1.0, C);
    bool positive = true;
    for (std::size_t i = 1; i < out.u.size(); ++i) positive = positive && out.u[i] > 0.0;
    out.converged = positive && out.residual <= kMatchTolerance && std::abs(out.u.back() - C) <= kTailTolerance;
    out.status = out.converged ? Status::Converged : Status::NotConverged;
    if (!positive) {
        out.message = "shot profile is not positive in the interior";
    } else if (out.residual > kMatchTolerance) {
        std::ostringstream os;
        os << "unstable-mode residual " << out.residual << " at the stitch point exceeds " << kMatchTolerance;
        out.message = os.str();
    } else if (!out.converged) {
        out.message = "profile does not reach C within the tail tolerance";
    }
    return out;
}

RadialSolution solve_truncated(const RadialProblem& problem, double depth, double tol) {
    problem.validate();
    require_positive_tol(tol);
    if (!(depth > 0.0) || !std::isfinite(depth)) throw InvalidInput("solve_truncated: depth must be > 0");
    const double C = problem.C;
    const double s0 = problem.s0();
    const double s1 = s0 + depth;

    auto mismatch = [&](double p) {
        const Trajectory tr = run(problem, 0.0, p, s0, s1, tol, {}, false, 0.0, 0.0);
        return tr.end_u - C;
    };

    double lo = 0.0;
    double glo = mismatch(lo);
    double hi = std::max(1.0, C / depth);
    double ghi = mismatch(hi);
    for (int k = 0; k < 60 && glo > 0.0; ++k) {
        hi = lo;
        ghi = glo;
        lo = (lo == 0.0) ? -std::max(1.0, C / depth) : 2.0 * lo;
        glo = mismatch(lo);
    }
    for (int k = 0; k < 60 && ghi < 0.0; ++k) {
        lo = hi;
        glo = ghi;
        hi *= 2.0;
        ghi = mismatch(hi);
    }
    RadialSolution out;
    out.limit = C;
    out.decay_rate = 0.0;
    if (glo > 0.0 || ghi < 0.0) {
        out.status = Status::NoBracket;
        out.message = "solve_truncated: could not bracket the initial slope";
        out.residual = INFINITY;
        return out;
    }
    double p_star = glo == 0.0 ? lo : hi;
    if (glo != 0.0 && ghi != 0.0) {
        std::uintmax_t iters = 200;
        const auto bracket = boost::math::tools::toms748_solve(mismatch, lo, hi, glo, ghi,
                                                               boost::math::tools::eps_tolerance<double>(52), iters);
        p_star = std::abs(mismatch(bracket.first)) <= std::abs(mismatch(bracket.second)) ? bracket.first
                                                                                          : bracket.second;
    }
    const Trajectory tr =
        run(problem, 0.0, p_star, s0, s1, tol, uniform_grid(s0, s1, std::min(0.005, depth / 400.0)), false, 0, 0);
    out.s = tr.s;
    out.u = tr.u;
    out.du = tr.du;
    out.alpha = -p_star;
    out.residual = std::abs(tr.end_u - C) / std::max(1.0, C);
    out.stitch_s = s1;
    out.converged = out.residual <= std::max(100.0 * tol, 1e-10);
    out.status = out.converged ? Status::Converged : Status::NotConverged;
    return out;
}

RadialSolution closed_form_reference(ClosedForm which, const ClosedFormParams& params,
                                     const std::vector<double>& grid) {
    if (params.n < 2) throw InvalidInput("closed_form_reference: dimension must be >= 2");
    if (!(params.C > 0.0)) throw InvalidInput("closed_form_reference: C must be > 0");
    RadialSolution out;
    out.limit = params.C;
    out.converged = true;
    out.status = Status::Converged;
    out.s = grid;
    out.u.reserve(grid.size());
    out.du.reserve(grid.size());
    const double C = params.C;
    const double m = params.n - 1.0;

    if (which == ClosedForm::HoroballLinear) {
        if (!(params.slope > 0.0)) throw InvalidInput("closed_form_reference: slope must be > 0");
        const double mu = 0.5 * (m - std::sqrt(m * m + 4.0 * params.slope));
        out.decay_rate = mu;
        out.alpha = C * mu;
        for (double s : grid) {
            if (s < 0.0) throw InvalidInput("closed_form_reference: horoball grid must be in s >= 0");
            out.u.push_back(C * (1.0 - std::exp(mu * s)));
            out.du.push_back(-C * mu * std::exp(mu * s));
        }
        return out;
    }

    const double R = params.R;
    if (!(R > 0.0)) throw InvalidInput("closed_form_reference: R must be > 0");
    if (params.n == 2) {
        const double lr = std::log(std::tanh(0.5 * R));
        out.decay_rate = -1.0;
        out.alpha = C / (std::sinh(R) * lr);
        for (double s : grid) {
            if (s < R) throw InvalidInput("closed_form_reference: grid point inside the ball");
            out.u.push_back(C * (1.0 - std::log(std::tanh(0.5 * s)) / lr));
            out.du.push_back(-C / (lr * std::sinh(s)));
        }
    } else if (params.n == 3) {
        const double cr = 1.0 / std::tanh(R);
        out.decay_rate = -2.0;
        out.alpha = -C / ((cr - 1.0) * std::sinh(R) * std::sinh(R));
        for (double s : grid) {
            if (s < R) throw InvalidInput("closed_form_reference: grid point inside the ball");
            out.u.push_back(C * (cr - 1.0 / std::tanh(s)) / (cr - 1.0));
            out.du.push_back(C / ((cr - 1.0) * std::sinh(s) * std::sinh(s)));
        }
    } else {
        throw UnsupportedDimension("closed_form_reference: ball-harmonic oracle is available for n = 2, 3");
    }
    return out;
}

OverdeterminedReport solve_overdetermined(Family family, int n, const Nonlinearity& f, double target_alpha,
                                          double tol, std::optional<double> C) {
    if (!(target_alpha <= 0.0)) throw InvalidInput("solve_overdetermined: target alpha must be <= 0");
    require_positive_tol(tol);
    double limit = 0.0;
    if (C) {
        limit = *C;
    } else {
        bool have = false;
        for (double r : f.roots_hint()) {
            if (r > 0.0 && std::abs(f(r)) <= 1e-10 && (!have || r < limit)) {
                limit = r;
                have = true;
            }
        }
        if (!have) throw InvalidInput("solve_overdetermined: no positive root of f declared; pass C");
    }
    const double integ_tol = std::min(tol, 1e-10);
    auto problem_at = [&](double param) {
        RadialProblem p;
        p.family = family;
        p.n = n;
        p.domain_param = param;
        p.f = f;
        p.C = limit;
        return p;
    };

    OverdeterminedReport rep;
    rep.C = limit;
    if (family == Family::HoroballExterior) {
        rep.profile = shoot(problem_at(0.0), integ_tol);
        rep.alpha = rep.profile.alpha;
        rep.alpha_min = rep.alpha_max = rep.alpha;
        rep.found = rep.profile.converged && std::abs(rep.alpha - target_alpha) <= tol;
        std::ostringstream os;
        os << "horoball family has no free parameter; unique alpha = " << rep.alpha
           << (rep.found ? " matches" : " does not match") << " the target";
        rep.message = os.str();
        return rep;
    }

    std::vector<double> params;
    if (family == Family::BallExterior) {
        for (int k = 0; k <= 32; ++k) params.push_back(0.02 * std::pow(600.0, k / 32.0));
    } else {
        for (int k = 0; k <= 32; ++k) params.push_back(-4.0 + 8.0 * k / 32.0);
    }
    auto alpha_at = [&](double param) {
        const RadialSolution s = shoot(problem_at(param), integ_tol);
        return s.converged ? s.alpha : std::numeric_limits<double>::quiet_NaN();
    };
    std::vector<double> alphas;
    rep.alpha_min = INFINITY;
    rep.alpha_max = -INFINITY;
    for (double p : params) {
        const double a = alpha_at(p);
        alphas.push_back(a);
        if (std::isfinite(a)) {
            rep.alpha_min = std::min(rep.alpha_min, a);
            rep.alpha_max = std::max(rep.alpha_max, a);
        }
    }
    for (std::size_t i = 0; i + 1 < params.size(); ++i) {
        const double ga = alphas[i] - target_alpha;
        const double gb = alphas[i + 1] - target_alpha;
        if (!std::isfinite(ga) || !std::isfinite(gb) || (ga > 0.0) == (gb > 0.0)) continue;
        double param = params[i];
        if (ga != 0.0 && gb != 0.0) {
            auto g = [&](double p) { return alpha_at(p) - target_alpha; };
            std::uintmax_t iters = 100;
            auto stop = [&](double a, double b) { return std::abs(b - a) <= 1e-3 * tol * (1.0 + std::abs(a)); };
            const auto br = boost::math::tools::toms748_solve(g, params[i], params[i + 1], ga, gb, stop, iters);
            param = 0.5 * (br.first + br.second);
        } else if (gb == 0.0) {
            param = params[i + 1];
        }
        rep.profile = shoot(problem_at(param), integ_tol);
        rep.domain_param = param;
        rep.alpha = rep.profile.alpha;
        rep.found = rep.profile.converged;
        rep.message = rep.found ? "domain parameter found" : "final shot did not converge";
        return rep;
    }
    std::ostringstream os;
    os << "target alpha " << target_alpha << " not attained; scanned alpha range [" << rep.alpha_min << ", "
       << rep.alpha_max << "] over " << (family == Family::BallExterior ? "R" : "c") << " in [" << params.front()
       << ", " << params.back() << "]";
    rep.message = os.str();
    return rep;
}

}  // namespace hyperoep::radial

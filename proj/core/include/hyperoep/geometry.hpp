#pragma once

// Computational model of hyperbolic n-space.
//
// Points are carried in one of two conformal charts (Poincare ball or upper
// half-space) and lifted to the hyperboloid {X : <X,X> = -1, X_n > 0} in
// R^{n,1} for every metric computation. The Minkowski form is
// <X,Y> = X_0 Y_0 + ... + X_{n-1} Y_{n-1} - X_n Y_n, i.e. J = diag(1,...,1,-1),
// with the time coordinate stored last. Isometries are elements of O+(n,1).
//
// The ball and half-space charts are related by the inversion
//     Phi(x) = 2 (x - s) / |x - s|^2 + s,   s = (0, ..., 0, -1),
// which maps the ball onto the half-space and is its own inverse. Ideal points
// are unit vectors of the ball chart; the half-space point at infinity is s.

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace hyperoep::geo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

enum class Model { Ball, HalfSpace };

/// Points closer than this to the chart boundary are rejected.
inline constexpr double kBoundaryMargin = 1e-14;
/// Constraint drift that triggers re-projection of an isometry.
inline constexpr double kReprojectDrift = 1e-10;
/// Drift that survives re-projection and is reported as degradation.
inline constexpr double kMaxDrift = 1e-8;

class Point {
public:
    Point(Model model, Vec coords);

    static Point ball(std::initializer_list<double> coords);
    static Point half_space(std::initializer_list<double> coords);
    /// Origin of the ball chart in dimension n.
    static Point origin(int n);

    Model model() const { return model_; }
    const Vec& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    double operator[](int i) const { return coords_[i]; }

private:
    Model model_;
    Vec coords_;
};

class IdealPoint {
public:
    /// Accepts any nonzero vector of the ball chart and normalizes it.
    explicit IdealPoint(Vec ball_direction);

    /// Boundary point (a, 0) of the half-space chart given its n-1 coordinates.
    static IdealPoint from_half_space(const Vec& boundary_coords);
    /// The half-space point at infinity (ball point s).
    static IdealPoint half_space_infinity(int n);
    /// Ideal point represented by a future-pointing null vector.
    static IdealPoint from_null_vector(const Vec& null_vector);

    const Vec& ball() const { return ball_; }
    int dim() const { return static_cast<int>(ball_.size()); }
    /// Null vector (xi, 1) on the light cone.
    Vec null_vector() const;

    bool is_half_space_infinity(double tol = 1e-12) const;
    /// Half-space boundary coordinates; nullopt for the point at infinity.
    std::optional<Vec> half_space_coords(double tol = 1e-12) const;

    /// Euclidean chord distance on the sphere at infinity.
    double chord_distance(const IdealPoint& other) const { return (ball_ - other.ball_).norm(); }

private:
    Vec ball_;
};

// ---------------------------------------------------------------------------
// Hyperboloid plumbing

double minkowski(const Vec& a, const Vec& b);
Vec to_hyperboloid(const Point& p);
Point from_hyperboloid(const Vec& x, Model model);
/// Pushes a chart tangent vector at p to the hyperboloid tangent space.
Vec push_tangent(const Point& p, const Vec& chart_v);
/// Inverse of push_tangent: hyperboloid tangent at lift(p) -> chart tangent at p.
Vec pull_tangent(const Point& p, const Vec& lorentz_v);
/// Length of a chart tangent vector measured in the hyperbolic metric.
double metric_norm(const Point& p, const Vec& chart_v);
/// Conformal factor lambda with g = lambda^2 * euclidean at p.
double conformal_factor(const Point& p);

// ---------------------------------------------------------------------------
// Metric operations

double distance(const Point& p, const Point& q);
/// Switches chart (ball <-> half-space) through Phi.
Point convert_model(const Point& p);
Point to_model(const Point& p, Model model);

/// Point at arc length t along the geodesic through p with metric-unit
/// initial velocity v (a chart vector). Nearly-unit v is normalized.
Point exp_map(const Point& p, const Vec& v, double t);
/// Forward endpoint of the geodesic ray from p with initial velocity v.
IdealPoint ideal_endpoint(const Point& p, const Vec& v);
/// Metric-unit chart vector at p pointing along the ray toward x.
Vec direction_to(const Point& p, const IdealPoint& x);
/// Metric-unit chart vector at p pointing toward q (p != q).
Vec direction_to(const Point& p, const Point& q);

/// Busemann function of x normalized to vanish at q0. Decreases at unit rate
/// along every geodesic ray converging to x.
double busemann(const IdealPoint& x, const Point& q0, const Point& p);

// ---------------------------------------------------------------------------
// Geodesics, hyperplanes, horospheres

class Geodesic {
public:
    Geodesic(const Point& base, const Vec& chart_direction);

    static Geodesic through(const Point& p, const Point& q);
    /// Oriented geodesic from ideal point `from` to ideal point `to`, based at
    /// the point where the two null directions are balanced.
    static Geodesic between(const IdealPoint& from, const IdealPoint& to);
    static Geodesic from_lorentz(Vec point, Vec direction, Model chart, int n);

    int dim() const { return static_cast<int>(x_.size()) - 1; }
    Model chart() const { return chart_; }

    Point at(double t) const;
    Point at(double t, Model model) const;
    /// Chart velocity at parameter t (in the base chart).
    Vec tangent_at(double t) const;
    IdealPoint forward_end() const;
    IdealPoint backward_end() const;

    const Vec& lorentz_point() const { return x_; }
    const Vec& lorentz_direction() const { return v_; }
    Vec lorentz_point_at(double t) const;
    Vec lorentz_direction_at(double t) const;

private:
    Geodesic(Vec x, Vec v, Model chart);
    Vec x_;
    Vec v_;
    Model chart_;
};

class Hyperplane {
public:
    /// Totally geodesic hyperplane through p with (chart) normal direction.
    Hyperplane(const Point& p, const Vec& chart_normal);

    /// Hyperplane through geodesic(t) orthogonal to the geodesic, normal
    /// pointing toward increasing t.
    static Hyperplane orthogonal_to(const Geodesic& g, double t);
    static Hyperplane from_lorentz_normal(Vec normal);

    int dim() const { return static_cast<int>(normal_.size()) - 1; }
    const Vec& lorentz_normal() const { return normal_; }

    double signed_distance(const Point& p) const;
    bool contains_ideal(const IdealPoint& x, double tol = 1e-10) const;
    /// For n = 2 the hyperplane is a geodesic; returns its two endpoints.
    std::vector<IdealPoint> ideal_endpoints_2d() const;

private:
    explicit Hyperplane(Vec normal);
    Vec normal_;
};

double signed_distance(const Hyperplane& plane, const Point& p);

class Horosphere {
public:
    Horosphere(IdealPoint base, double level, Point reference);

    const IdealPoint& base() const { return base_; }
    double level() const { return level_; }
    const Point& reference() const { return reference_; }

    /// busemann(p) - level: negative inside the horoball.
    double offset(const Point& p) const;
    bool contains(const Point& p, double tol = 1e-10) const;

private:
    IdealPoint base_;
    double level_;
    Point reference_;
};

// ---------------------------------------------------------------------------
// Isometries

class Isometry {
public:
    static Isometry identity(int n);
    /// Validates the Lorentz constraint, re-projecting small drift.
    explicit Isometry(Mat lorentz);
    /// Bypasses validation. Used to inject faults in self-tests.
    static Isometry unchecked(Mat lorentz);

    int dim() const { return static_cast<int>(m_.rows()) - 1; }
    const Mat& matrix() const { return m_; }
    bool preserves_orientation() const { return orientation_ > 0; }
    /// max |M^T J M - J|
    double lorentz_drift() const;

    /// this o rhs
    Isometry compose(const Isometry& rhs) const;
    Isometry inverse() const;

    Point apply(const Point& p) const;
    IdealPoint apply(const IdealPoint& x) const;
    Vec apply_lorentz(const Vec& x) const { return m_ * x; }

private:
    Isometry(Mat lorentz, bool validate);
    Mat m_;
    int orientation_ = 1;
};

inline Isometry operator*(const Isometry& a, const Isometry& b) { return a.compose(b); }

Isometry compose(const Isometry& a, const Isometry& b);
Isometry inverse(const Isometry& a);
Point apply(const Isometry& a, const Point& p);
IdealPoint apply_ideal(const Isometry& a, const IdealPoint& x);

Isometry reflection(const Hyperplane& plane);
/// Transvection along g by arc length t (parallel transport along g).
Isometry hyperbolic_translation(const Geodesic& g, double t);
/// Parabolic translation fixing x. For x the half-space point at infinity this
/// is (x', x_n) -> (x' + v, x_n); other base points use the conjugate by the
/// Householder reflection of the ball taking s to x.
Isometry parabolic_translation(const IdealPoint& x, const Vec& v);
/// Rotation about the axis beta. n = 3: angle theta in the plane normal to
/// beta. n = 2: theta must be 0 (identity) or pi (the reflection in beta).
Isometry rotation_about(const Geodesic& beta, double theta);
/// Elliptic rotation at p by `angle` in the tangent plane spanned by the chart
/// vectors a, b (Gram-Schmidt orthonormalized in the metric).
Isometry rotation_at(const Point& p, const Vec& a, const Vec& b, double angle);

/// Re-orthonormalizes a near-Lorentz matrix column by column.
Mat reproject_lorentz(const Mat& m);
Mat minkowski_gram(int n);

}  // namespace hyperoep::geo

#include "hyperoep/geometry.hpp"

#include "hyperoep/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace hyperoep::geo {
namespace {

// Silent renormalization below this deviation, warning up to kUnitReject.
constexpr double kUnitSilent = 1e-9;
constexpr double kUnitReject = 1e-6;

void check_finite(const Vec& v, const char* what) {
    if (!v.allFinite()) {
        throw InvalidInput(std::string(what) + ": non-finite coordinates");
    }
}

void check_same_dim(int a, int b, const char* what) {
    if (a != b) {
        std::ostringstream os;
        os << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw InvalidInput(os.str());
    }
}

Vec special_point_s(int n) {
    Vec s = Vec::Zero(n);
    s[n - 1] = -1.0;
    return s;
}

/// Inversion Phi; maps ball <-> half-space and is an involution.
Vec phi(const Vec& x) {
    const Vec s = special_point_s(static_cast<int>(x.size()));
    const Vec d = x - s;
    return 2.0 * d / d.squaredNorm() + s;
}

/// Normalizes a Lorentz-tangent vector to unit length, enforcing the
/// near-unit contract of the metric operations.
Vec unitize(const Vec& lorentz_v, const char* what) {
    const double n2 = minkowski(lorentz_v, lorentz_v);
    if (!(n2 > 0.0)) {
        throw InvalidInput(std::string(what) + ": zero or non-spacelike tangent vector");
    }
    const double norm = std::sqrt(n2);
    const double dev = std::abs(norm - 1.0);
    if (dev > kUnitReject) {
        std::ostringstream os;
        os << what << ": tangent vector is not metric-unit (norm " << norm << ")";
        throw InvalidInput(os.str());
    }
    if (dev > kUnitSilent) {
        std::ostringstream os;
        os << what << ": renormalized tangent vector with metric norm " << norm;
        warn(os.str());
    }
    return lorentz_v / norm;
}

/// Rescales a hyperboloid vector back onto the upper sheet.
/// Far from the origin <X,X> loses all precision, so the time coordinate is
/// recomputed from the spatial part instead of rescaling.
Vec renormalize_timelike(const Vec& x) {
    const Eigen::Index n = x.size() - 1;
    const double t = x[n];
    const double n2 = -minkowski(x, x);
    const double rounding = 16.0 * std::numeric_limits<double>::epsilon() * t * t;
    if (!(t > 0.0) || !(n2 > -rounding)) {
        throw NumericalDegradation("hyperboloid point left the upper sheet");
    }
    Vec out = (n2 > rounding) ? Vec(x / std::sqrt(n2)) : x;
    out[n] = std::sqrt(1.0 + out.head(n).squaredNorm());
    return out;
}

Mat outer_j(const Vec& a, const Vec& b) {
    // a * (J b)^T
    Vec jb = b;
    jb[jb.size() - 1] = -jb[jb.size() - 1];
    return a * jb.transpose();
}

/// Lorentz-orthonormal vectors orthogonal to `fixed`, completed from the
/// standard basis.
std::vector<Vec> orthonormal_complement(const std::vector<Vec>& fixed, int count) {
    const int dim = static_cast<int>(fixed.front().size());
    std::vector<Vec> basis = fixed;
    std::vector<Vec> out;
    for (int k = 0; k < dim && static_cast<int>(out.size()) < count; ++k) {
        Vec c = Vec::Unit(dim, k);
        for (const Vec& b : basis) {
            const double bb = minkowski(b, b);
            c -= (minkowski(c, b) / bb) * b;
        }
        const double cc = minkowski(c, c);
        if (cc > 1e-8) {
            c /= std::sqrt(cc);
            basis.push_back(c);
            out.push_back(c);
        }
    }
    if (static_cast<int>(out.size()) != count) {
        throw NumericalDegradation("could not complete an orthonormal frame");
    }
    return out;
}

Mat plane_rotation(const Vec& e1, const Vec& e2, double angle) {
    const int dim = static_cast<int>(e1.size());
    Mat m = Mat::Identity(dim, dim);
    m += (std::cos(angle) - 1.0) * (outer_j(e1, e1) + outer_j(e2, e2));
    m += std::sin(angle) * (outer_j(e2, e1) - outer_j(e1, e2));
    return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Point / IdealPoint

Point::Point(Model model, Vec coords) : model_(model), coords_(std::move(coords)) {
    if (coords_.size() < 2) {
        throw InvalidInput("Point: dimension must be at least 2");
    }
    check_finite(coords_, "Point");
    if (model_ == Model::Ball) {
        if (coords_.norm() >= 1.0 - kBoundaryMargin) {
            throw InvalidInput("Point: ball coordinates must satisfy |x| < 1");
        }
    } else if (coords_[coords_.size() - 1] <= kBoundaryMargin) {
        throw InvalidInput("Point: half-space last coordinate must be positive");
    }
}

Point Point::ball(std::initializer_list<double> coords) {
    Vec v(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (double c : coords) v[i++] = c;
    return Point(Model::Ball, std::move(v));
}

Point Point::half_space(std::initializer_list<double> coords) {
    Vec v(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (double c : coords) v[i++] = c;
    return Point(Model::HalfSpace, std::move(v));
}

Point Point::origin(int n) { return Point(Model::Ball, Vec::Zero(n)); }

IdealPoint::IdealPoint(Vec ball_direction) : ball_(std::move(ball_direction)) {
    check_finite(ball_, "IdealPoint");
    const double n = ball_.norm();
    if (ball_.size() < 2 || n < 1e-300) {
        throw InvalidInput("IdealPoint: need a nonzero vector of dimension >= 2");
    }
    ball_ /= n;
}

IdealPoint IdealPoint::from_half_space(const Vec& a) {
    check_finite(a, "IdealPoint::from_half_space");
    const int n = static_cast<int>(a.size()) + 1;
    const double a2 = a.squaredNorm();
    Vec xi(n);
    xi.head(n - 1) = 2.0 * a;
    xi[n - 1] = 1.0 - a2;
    return IdealPoint(xi / (1.0 + a2));
}

IdealPoint IdealPoint::half_space_infinity(int n) { return IdealPoint(special_point_s(n)); }

IdealPoint IdealPoint::from_null_vector(const Vec& null_vector) {
    const int n = static_cast<int>(null_vector.size()) - 1;
    const double t = null_vector[n];
    if (!(t > 0.0)) {
        throw InvalidInput("IdealPoint::from_null_vector: vector must be future pointing");
    }
    return IdealPoint(null_vector.head(n) / t);
}

Vec IdealPoint::null_vector() const {
    Vec nv(ball_.size() + 1);
    nv.head(ball_.size()) = ball_;
    nv[ball_.size()] = 1.0;
    return nv;
}

bool IdealPoint::is_half_space_infinity(double tol) const {
    return (ball_ - special_point_s(dim())).norm() <= tol;
}

std::optional<Vec> IdealPoint::half_space_coords(double tol) const {
    if (is_half_space_infinity(tol)) {
        return std::nullopt;
    }
    // Phi restricted to the sphere; the last coordinate vanishes.
    const Vec h = phi(ball_);
    return h.head(dim() - 1);
}

// ---------------------------------------------------------------------------
// Hyperboloid plumbing

double minkowski(const Vec& a, const Vec& b) {
    const Eigen::Index n = a.size() - 1;
    return a.head(n).dot(b.head(n)) - a[n] * b[n];
}

Mat minkowski_gram(int n) {
    Mat j = Mat::Identity(n + 1, n + 1);
    j(n, n) = -1.0;
    return j;
}

Vec to_hyperboloid(const Point& p) {
    const Vec& x = p.coords();
    const int n = p.dim();
    Vec out(n + 1);
    if (p.model() == Model::Ball) {
        const double r2 = x.squaredNorm();
        const double d = 1.0 - r2;
        out.head(n) = 2.0 * x / d;
        out[n] = (1.0 + r2) / d;
    } else {
        const double y = x[n - 1];
        const double q = x.squaredNorm();
        out.head(n - 1) = x.head(n - 1) / y;
        out[n - 1] = (1.0 - q) / (2.0 * y);
        out[n] = (1.0 + q) / (2.0 * y);
    }
    return out;
}

Point from_hyperboloid(const Vec& raw, Model model) {
    const Vec x = renormalize_timelike(raw);
    const int n = static_cast<int>(x.size()) - 1;
    if (model == Model::Ball) {
        return Point(Model::Ball, x.head(n) / (1.0 + x[n]));
    }
    const double sigma = x[n] + x[n - 1];
    if (!(sigma > 0.0)) {
        throw ChartError("from_hyperboloid: point not representable in the half-space chart");
    }
    Vec h(n);
    h.head(n - 1) = x.head(n - 1) / sigma;
    h[n - 1] = 1.0 / sigma;
    return Point(Model::HalfSpace, std::move(h));
}

Vec push_tangent(const Point& p, const Vec& v) {
    check_same_dim(p.dim(), static_cast<int>(v.size()), "push_tangent");
    const Vec& x = p.coords();
    const int n = p.dim();
    Vec out(n + 1);
    if (p.model() == Model::Ball) {
        const double d = 1.0 - x.squaredNorm();
        const double xv = x.dot(v);
        out.head(n) = 2.0 * v / d + 4.0 * xv / (d * d) * x;
        out[n] = 4.0 * xv / (d * d);
    } else {
        const double y = x[n - 1];
        const double vy = v[n - 1];
        const double q = x.squaredNorm();
        const double dq = 2.0 * x.dot(v);
        out.head(n - 1) = v.head(n - 1) / y - x.head(n - 1) * (vy / (y * y));
        out[n - 1] = -dq / (2.0 * y) - (1.0 - q) * vy / (2.0 * y * y);
        out[n] = dq / (2.0 * y) - (1.0 + q) * vy / (2.0 * y * y);
    }
    return out;
}

Vec pull_tangent(const Point& p, const Vec& dx) {
    const int n = p.dim();
    check_same_dim(n + 1, static_cast<int>(dx.size()), "pull_tangent");
    const Vec x = to_hyperboloid(p);
    Vec out(n);
    if (p.model() == Model::Ball) {
        const double tp1 = 1.0 + x[n];
        out = dx.head(n) / tp1 - x.head(n) * (dx[n] / (tp1 * tp1));
    } else {
        const double sigma = x[n] + x[n - 1];
        const double dsigma = dx[n] + dx[n - 1];
        out.head(n - 1) = dx.head(n - 1) / sigma - x.head(n - 1) * (dsigma / (sigma * sigma));
        out[n - 1] = -dsigma / (sigma * sigma);
    }
    return out;
}

double conformal_factor(const Point& p) {
    if (p.model() == Model::Ball) {
        return 2.0 / (1.0 - p.coords().squaredNorm());
    }
    return 1.0 / p.coords()[p.dim() - 1];
}

double metric_norm(const Point& p, const Vec& v) { return conformal_factor(p) * v.norm(); }

// ---------------------------------------------------------------------------
// Metric operations

double distance(const Point& p, const Point& q) {
    check_same_dim(p.dim(), q.dim(), "distance");
    const Vec d = to_hyperboloid(p) - to_hyperboloid(q);
    const double chord2 = std::max(0.0, minkowski(d, d));
    return 2.0 * std::asinh(0.5 * std::sqrt(chord2));
}

Point convert_model(const Point& p) {
    const Model other = p.model() == Model::Ball ? Model::HalfSpace : Model::Ball;
    return Point(other, phi(p.coords()));
}

Point to_model(const Point& p, Model model) { return p.model() == model ? p : convert_model(p); }

Point exp_map(const Point& p, const Vec& v, double t) {
    const Vec x = to_hyperboloid(p);
    const Vec u = unitize(push_tangent(p, v), "exp_map");
    return from_hyperboloid(x * std::cosh(t) + u * std::sinh(t), p.model());
}

IdealPoint ideal_endpoint(const Point& p, const Vec& v) {
    const Vec x = to_hyperboloid(p);
    const Vec u = unitize(push_tangent(p, v), "ideal_endpoint");
    return IdealPoint::from_null_vector(x + u);
}

Vec direction_to(const Point& p, const IdealPoint& target) {
    check_same_dim(p.dim(), target.dim(), "direction_to");
    const Vec x = to_hyperboloid(p);
    const Vec nv = target.null_vector();
    const Vec u = nv / (-minkowski(x, nv)) - x;
    return pull_tangent(p, u);
}

Vec direction_to(const Point& p, const Point& q) {
    check_same_dim(p.dim(), q.dim(), "direction_to");
    const Vec x = to_hyperboloid(p);
    const Vec y = to_hyperboloid(q);
    Vec u = y + minkowski(x, y) * x;
    const double n2 = minkowski(u, u);
    if (!(n2 > 0.0)) {
        throw InvalidInput("direction_to: points coincide");
    }
    return pull_tangent(p, u / std::sqrt(n2));
}

double busemann(const IdealPoint& target, const Point& q0, const Point& p) {
    check_same_dim(q0.dim(), target.dim(), "busemann");
    check_same_dim(p.dim(), target.dim(), "busemann");
    const Vec nv = target.null_vector();
    return std::log(-minkowski(to_hyperboloid(p), nv)) -
           std::log(-minkowski(to_hyperboloid(q0), nv));
}

// ---------------------------------------------------------------------------
// Geodesic

Geodesic::Geodesic(Vec x, Vec v, Model chart) : x_(std::move(x)), v_(std::move(v)), chart_(chart) {}

Geodesic::Geodesic(const Point& base, const Vec& chart_direction)
    : x_(to_hyperboloid(base)),
      v_(unitize(push_tangent(base, chart_direction), "Geodesic")),
      chart_(base.model()) {}

Geodesic Geodesic::through(const Point& p, const Point& q) { return Geodesic(p, direction_to(p, q)); }

Geodesic Geodesic::between(const IdealPoint& from, const IdealPoint& to) {
    check_same_dim(from.dim(), to.dim(), "Geodesic::between");
    const Vec a = to.null_vector();
    const Vec b = from.null_vector();
    const double ab = minkowski(a, b);
    if (!(ab < -1e-14)) {
        throw InvalidInput("Geodesic::between: endpoints must be distinct");
    }
    const double scale = std::sqrt(-2.0 * ab);
    return Geodesic((a + b) / scale, (a - b) / scale, Model::Ball);
}

Geodesic Geodesic::from_lorentz(Vec point, Vec direction, Model chart, int n) {
    check_same_dim(n + 1, static_cast<int>(point.size()), "Geodesic::from_lorentz");
    Vec x = renormalize_timelike(point);
    Vec v = direction + minkowski(direction, x) * x;
    return Geodesic(std::move(x), unitize(v, "Geodesic::from_lorentz"), chart);
}

Vec Geodesic::lorentz_point_at(double t) const { return x_ * std::cosh(t) + v_ * std::sinh(t); }
Vec Geodesic::lorentz_direction_at(double t) const { return x_ * std::sinh(t) + v_ * std::cosh(t); }

Point Geodesic::at(double t) const { return at(t, chart_); }
Point Geodesic::at(double t, Model model) const { return from_hyperboloid(lorentz_point_at(t), model); }

Vec Geodesic::tangent_at(double t) const { return pull_tangent(at(t), lorentz_direction_at(t)); }

IdealPoint Geodesic::forward_end() const { return IdealPoint::from_null_vector(x_ + v_); }
IdealPoint Geodesic::backward_end() const { return IdealPoint::from_null_vector(x_ - v_); }

// ---------------------------------------------------------------------------
// Hyperplane / Horosphere

Hyperplane::Hyperplane(Vec normal) : normal_(std::move(normal)) {}

Hyperplane::Hyperplane(const Point& p, const Vec& chart_normal) {
    Vec n = push_tangent(p, chart_normal);
    const double n2 = minkowski(n, n);
    if (!(n2 > 0.0)) {
        throw InvalidInput("Hyperplane: zero normal");
    }
    normal_ = n / std::sqrt(n2);
}

Hyperplane Hyperplane::orthogonal_to(const Geodesic& g, double t) {
    return Hyperplane(g.lorentz_direction_at(t));
}

Hyperplane Hyperplane::from_lorentz_normal(Vec normal) {
    const double n2 = minkowski(normal, normal);
    if (!(n2 > 0.0)) {
        throw InvalidInput("Hyperplane: normal must be spacelike");
    }
    return Hyperplane(normal / std::sqrt(n2));
}

double Hyperplane::signed_distance(const Point& p) const {
    check_same_dim(p.dim(), dim(), "signed_distance");
    return std::asinh(minkowski(to_hyperboloid(p), normal_));
}

double signed_distance(const Hyperplane& plane, const Point& p) { return plane.signed_distance(p); }

bool Hyperplane::contains_ideal(const IdealPoint& x, double tol) const {
    return std::abs(minkowski(x.null_vector(), normal_)) <= tol;
}

std::vector<IdealPoint> Hyperplane::ideal_endpoints_2d() const {
    if (dim() != 2) {
        throw UnsupportedDimension("ideal_endpoints_2d: requires n = 2");
    }
    // The plane normal_^perp is spanned by one timelike and one spacelike
    // unit vector; its two null lines are the endpoints.
    const Vec e_t = Vec::Unit(3, 2);
    Vec timelike = e_t - minkowski(e_t, normal_) * normal_;
    timelike /= std::sqrt(-minkowski(timelike, timelike));
    const Vec spacelike = orthonormal_complement({normal_, timelike}, 1).front();
    return {IdealPoint::from_null_vector(timelike + spacelike),
            IdealPoint::from_null_vector(timelike - spacelike)};
}

Horosphere::Horosphere(IdealPoint base, double level, Point reference)
    : base_(std::move(base)), level_(level), reference_(std::move(reference)) {
    check_same_dim(base_.dim(), reference_.dim(), "Horosphere");
}

double Horosphere::offset(const Point& p) const { return busemann(base_, reference_, p) - level_; }

bool Horosphere::contains(const Point& p, double tol) const { return std::abs(offset(p)) <= tol; }

// ---------------------------------------------------------------------------
// Isometry

Mat reproject_lorentz(const Mat& m) {
    const Eigen::Index dim = m.rows();
    Mat out = m;
    Vec t = out.col(dim - 1);
    const double tt = -minkowski(t, t);
    if (!(tt > 0.0)) {
        throw NumericalDegradation("reproject_lorentz: time column is not timelike");
    }
    t /= std::sqrt(tt);
    if (t[dim - 1] < 0.0) t = -t;
    out.col(dim - 1) = t;
    for (Eigen::Index j = 0; j + 1 < dim; ++j) {
        Vec c = out.col(j);
        c += minkowski(c, t) * t;
        for (Eigen::Index k = 0; k < j; ++k) {
            const Vec ck = out.col(k);
            c -= minkowski(c, ck) * ck;
        }
        const double cc = minkowski(c, c);
        if (!(cc > 0.0)) {
            throw NumericalDegradation("reproject_lorentz: degenerate column");
        }
        out.col(j) = c / std::sqrt(cc);
    }
    return out;
}

Isometry::Isometry(Mat lorentz, bool validate) : m_(std::move(lorentz)) {
    if (m_.rows() != m_.cols() || m_.rows() < 3) {
        throw InvalidInput("Isometry: need a square matrix of size >= 3");
    }
    if (validate) {
        double drift = lorentz_drift();
        if (!(drift <= kMaxDrift)) {
            std::ostringstream os;
            os << "Isometry: Lorentz constraint violated (drift " << drift << ")";
            throw NumericalDegradation(os.str());
        }
        if (drift > kReprojectDrift) {
            m_ = reproject_lorentz(m_);
            drift = lorentz_drift();
            if (!(drift <= kMaxDrift)) {
                throw NumericalDegradation("Isometry: drift persists after re-projection");
            }
        }
        if (m_(m_.rows() - 1, m_.cols() - 1) < 1.0 - 1e-9) {
            throw InvalidInput("Isometry: matrix does not preserve the upper sheet");
        }
    }
    orientation_ = m_.determinant() > 0.0 ? 1 : -1;
}

Isometry::Isometry(Mat lorentz) : Isometry(std::move(lorentz), true) {}

Isometry Isometry::unchecked(Mat lorentz) { return Isometry(std::move(lorentz), false); }

Isometry Isometry::identity(int n) { return Isometry(Mat::Identity(n + 1, n + 1), false); }

double Isometry::lorentz_drift() const {
    const Mat j = minkowski_gram(dim());
    return (m_.transpose() * j * m_ - j).cwiseAbs().maxCoeff();
}

Isometry Isometry::compose(const Isometry& rhs) const {
    check_same_dim(dim(), rhs.dim(), "Isometry::compose");
    return Isometry(m_ * rhs.m_, true);
}

Isometry Isometry::inverse() const {
    const Mat j = minkowski_gram(dim());
    return Isometry(j * m_.transpose() * j, true);
}

Point Isometry::apply(const Point& p) const {
    check_same_dim(p.dim(), dim(), "Isometry::apply");
    return from_hyperboloid(m_ * to_hyperboloid(p), p.model());
}

IdealPoint Isometry::apply(const IdealPoint& x) const {
    check_same_dim(x.dim(), dim(), "Isometry::apply");
    return IdealPoint::from_null_vector(m_ * x.null_vector());
}

Isometry compose(const Isometry& a, const Isometry& b) { return a.compose(b); }
Isometry inverse(const Isometry& a) { return a.inverse(); }
Point apply(const Isometry& a, const Point& p) { return a.apply(p); }
IdealPoint apply_ideal(const Isometry& a, const IdealPoint& x) { return a.apply(x); }

Isometry reflection(const Hyperplane& plane) {
    const Vec& nv = plane.lorentz_normal();
    const Eigen::Index dim = nv.size();
    return Isometry(Mat::Identity(dim, dim) - 2.0 * outer_j(nv, nv));
}

Isometry hyperbolic_translation(const Geodesic& g, double t) {
    const Vec& x = g.lorentz_point();
    const Vec& v = g.lorentz_direction();
    const Eigen::Index dim = x.size();
    const double ch = std::cosh(t);
    const double sh = std::sinh(t);
    Mat m = Mat::Identity(dim, dim);
    m -= outer_j((ch - 1.0) * x + sh * v, x);
    m += outer_j(sh * x + (ch - 1.0) * v, v);
    return Isometry(std::move(m));
}

Isometry parabolic_translation(const IdealPoint& base, const Vec& v) {
    const int n = base.dim();
    check_same_dim(n - 1, static_cast<int>(v.size()), "parabolic_translation");
    check_finite(v, "parabolic_translation");

    // Null rotation fixing the light-like direction of s.
    Vec nv = Vec::Zero(n + 1);
    nv[n - 1] = -1.0;
    nv[n] = 1.0;
    Vec w = Vec::Zero(n + 1);
    w.head(n - 1) = -v;
    const Mat a = outer_j(w, nv) - outer_j(nv, w);
    Mat t = Mat::Identity(n + 1, n + 1) + a + 0.5 * a * a;

    const Vec s = special_point_s(n);
    const Vec diff = s - base.ball();
    if (diff.norm() > 1e-12) {
        const Vec u = diff.normalized();
        Mat g = Mat::Identity(n + 1, n + 1);
        g.topLeftCorner(n, n) -= 2.0 * u * u.transpose();
        t = g * t * g;
    }
    return Isometry(std::move(t));
}

Isometry rotation_about(const Geodesic& beta, double theta) {
    const int n = beta.dim();
    if (n > 3) {
        throw UnsupportedDimension("rotation_about: implemented for n = 2 and n = 3");
    }
    const auto frame = orthonormal_complement({beta.lorentz_point(), beta.lorentz_direction()}, n - 1);
    if (n == 3) {
        return Isometry(plane_rotation(frame[0], frame[1], theta));
    }
    const double wrapped = std::remainder(theta, 2.0 * std::numbers::pi);
    if (std::abs(wrapped) <= 1e-12) {
        return Isometry::identity(2);
    }
    if (std::abs(std::abs(wrapped) - std::numbers::pi) <= 1e-12) {
        return reflection(Hyperplane::from_lorentz_normal(frame[0]));
    }
    throw InvalidInput("rotation_about: for n = 2 the angle must be 0 or pi");
}

Isometry rotation_at(const Point& p, const Vec& a, const Vec& b, double angle) {
    Vec e1 = push_tangent(p, a);
    const double e1n = minkowski(e1, e1);
    if (!(e1n > 0.0)) throw InvalidInput("rotation_at: zero tangent vector");
    e1 /= std::sqrt(e1n);
    Vec e2 = push_tangent(p, b);
    e2 -= minkowski(e2, e1) * e1;
    const double e2n = minkowski(e2, e2);
    if (!(e2n > 1e-24)) throw InvalidInput("rotation_at: tangent vectors are parallel");
    e2 /= std::sqrt(e2n);
    return Isometry(plane_rotation(e1, e2, angle));
}

}  // namespace hyperoep::geo

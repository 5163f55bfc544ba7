#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lagsurf {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter or input outside the admissible domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Degenerate geometry: vanishing speed, leaf through the origin, singular metric.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A curve or integrand produced a non-finite value.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, double parameter)
      : Error(what + " (parameter " + std::to_string(parameter) + ")"), parameter_(parameter) {}
  double parameter() const { return parameter_; }

 private:
  double parameter_;
};

/// Generating data violates a Legendrian / sphere / anti-de Sitter constraint.
class ConstraintError : public Error {
 public:
  ConstraintError(const std::string& what, double violation)
      : Error(what + " (violation " + std::to_string(violation) + ")"), violation_(violation) {}
  double violation() const { return violation_; }

 private:
  double violation_;
};

// ---------------------------------------------------------------------------
// Points of C^2 = R^4
// ---------------------------------------------------------------------------

/// A point (or vector) of C^2. The real scalar product is
/// <u, v> = Re(u1 conj(v1) + u2 conj(v2)); J is multiplication by i and the
/// symplectic form is omega(u, v) = <u, J v>.
struct PointC2 {
  cplx z1{};
  cplx z2{};

  PointC2& operator+=(const PointC2& o) {
    z1 += o.z1;
    z2 += o.z2;
    return *this;
  }
  PointC2& operator-=(const PointC2& o) {
    z1 -= o.z1;
    z2 -= o.z2;
    return *this;
  }
  PointC2& operator*=(double a) {
    z1 *= a;
    z2 *= a;
    return *this;
  }
};

inline PointC2 operator+(PointC2 a, const PointC2& b) { return a += b; }
inline PointC2 operator-(PointC2 a, const PointC2& b) { return a -= b; }
inline PointC2 operator-(const PointC2& a) { return {-a.z1, -a.z2}; }
inline PointC2 operator*(double a, PointC2 p) { return p *= a; }
inline PointC2 operator*(PointC2 p, double a) { return p *= a; }
inline PointC2 operator/(PointC2 p, double a) { return p *= (1.0 / a); }
/// Complex scalar multiple (componentwise by the same complex number).
inline PointC2 operator*(cplx a, const PointC2& p) { return {a * p.z1, a * p.z2}; }
inline PointC2 operator*(const PointC2& p, cplx a) { return {a * p.z1, a * p.z2}; }

/// Hermitian product sum u_j conj(v_j).
inline cplx hermitian(const PointC2& u, const PointC2& v) {
  return u.z1 * std::conj(v.z1) + u.z2 * std::conj(v.z2);
}
/// Real scalar product of R^4.
inline double dot(const PointC2& u, const PointC2& v) { return hermitian(u, v).real(); }
inline double norm2(const PointC2& u) { return std::norm(u.z1) + std::norm(u.z2); }
inline double norm(const PointC2& u) { return std::sqrt(norm2(u)); }
inline PointC2 J(const PointC2& u) { return {cplx(0, 1) * u.z1, cplx(0, 1) * u.z2}; }
inline double omega(const PointC2& u, const PointC2& v) { return dot(u, J(v)); }
inline PointC2 conj(const PointC2& u) { return {std::conj(u.z1), std::conj(u.z2)}; }
/// Complex determinant det_C(u, v) = u1 v2 - u2 v1.
inline cplx det_c(const PointC2& u, const PointC2& v) { return u.z1 * v.z2 - u.z2 * v.z1; }

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
inline bool is_finite(const PointC2& p) { return is_finite(p.z1) && is_finite(p.z2); }

/// Real inner product of C viewed as R^2.
inline double dot2(cplx a, cplx b) { return (a * std::conj(b)).real(); }

// ---------------------------------------------------------------------------
// Intervals, jets, curves
// ---------------------------------------------------------------------------

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const { return hi - lo; }
  bool contains(double x, double slack = 0.0) const { return x >= lo - slack && x <= hi + slack; }
};

struct RealJet {
  double value = 0.0;
  double d1 = 0.0;
};

struct ComplexJet {
  cplx value{};
  cplx d1{};
};

struct PlanarJet {
  cplx value{};
  cplx d1{};
  cplx d2{};
};

struct C2Jet {
  PointC2 value{};
  PointC2 d1{};
  PointC2 d2{};
};

/// Real-valued density with its first derivative (translation terms W1, W2, ruling drift).
using RealFunction = std::function<RealJet(double)>;
/// Complex-valued density with its first derivative (translation terms W).
using ComplexFunction = std::function<ComplexJet(double)>;

RealFunction constant_real(double value);
ComplexFunction constant_complex(cplx value);

/// A planar curve s -> gamma(s) in C together with gamma' and gamma''.
class CurvePlanar {
 public:
  using Eval = std::function<PlanarJet(double)>;

  CurvePlanar(Eval eval, Interval domain, bool arclength);

  /// Evaluates the jet; throws DomainError outside the domain and
  /// EvaluationError on non-finite output.
  PlanarJet operator()(double s) const;
  const Interval& domain() const { return domain_; }
  bool arclength() const { return arclength_; }

 private:
  Eval eval_;
  Interval domain_;
  bool arclength_;
};

struct SphereTag {};
struct AntiDeSitterTag {};

/// A curve in C^2 with two derivatives. The tag distinguishes the Legendrian
/// curves of S^3 from those of the anti-de Sitter space H^3_1; both are
/// otherwise stored the same way.
template <class Tag>
class CurveC2 {
 public:
  using Eval = std::function<C2Jet(double)>;

  CurveC2(Eval eval, Interval domain, bool unit_speed)
      : eval_(std::move(eval)), domain_(domain), unit_speed_(unit_speed) {
    if (!(domain.hi > domain.lo)) throw DomainError("curve domain is empty");
  }

  C2Jet operator()(double s) const {
    const double slack = 1e-9 * std::max(1.0, domain_.length());
    if (!domain_.contains(s, slack)) throw DomainError("curve parameter outside domain: " + std::to_string(s));
    C2Jet j = eval_(s);
    if (!is_finite(j.value) || !is_finite(j.d1) || !is_finite(j.d2))
      throw EvaluationError("non-finite curve evaluation", s);
    return j;
  }
  const Interval& domain() const { return domain_; }
  bool unit_speed() const { return unit_speed_; }

 private:
  Eval eval_;
  Interval domain_;
  bool unit_speed_;
};

using CurveS3Legendrian = CurveC2<SphereTag>;
using CurveAdSLegendrian = CurveC2<AntiDeSitterTag>;

// ---------------------------------------------------------------------------
// Surface jets, metrics, grids, reports
// ---------------------------------------------------------------------------

struct SurfaceJet {
  PointC2 x, xs, xt, xss, xst, xtt;
};

bool is_finite(const SurfaceJet& j);

struct Metric2 {
  double e = 0.0;
  double f = 0.0;
  double g = 0.0;
  double det = 0.0;

  bool degenerate(double tol = 1e-14) const { return !(e > tol && g > tol && det > tol * std::max(1.0, e * g)); }
};

/// Uniform parameter grid. When periodic_t is set the t-nodes are
/// t_lo + j (t_hi - t_lo) / n_t (the endpoint is identified with t_lo);
/// otherwise both directions include their endpoints.
struct GridSpec {
  int n_s = 64;
  int n_t = 64;
  Interval s_range{0.0, 1.0};
  Interval t_range{0.0, kTwoPi};
  bool periodic_t = true;

  double s_at(int i) const;
  double t_at(int j) const;
  double ds() const;
  double dt() const;
  std::size_t size() const { return static_cast<std::size_t>(n_s) * static_cast<std::size_t>(n_t); }
};

struct ResidualReport {
  std::string name;
  GridSpec grid;
  double max_abs = 0.0;
  double mean_abs = 0.0;
  double argmax_s = 0.0;
  double argmax_t = 0.0;
  std::size_t samples = 0;
  std::vector<std::string> warnings;
};

/// Accumulates |value| samples into a report; non-finite values are skipped
/// with a warning.
class ReportBuilder {
 public:
  ReportBuilder(std::string name, GridSpec grid);
  void add(double value, double s, double t);
  void warn(std::string message);
  ResidualReport finish() &&;

 private:
  ResidualReport report_;
  double sum_ = 0.0;
};

// ---------------------------------------------------------------------------
// Curve constraints and reparametrization
// ---------------------------------------------------------------------------

/// Maximum violation of |gamma|^2 = 1, <gamma', i gamma> = 0 (and unit speed
/// when flagged) over n_samples uniform parameters.
ResidualReport curve_constraint_residual(const CurveS3Legendrian& curve, int n_samples);
/// Maximum violation of |a1|^2 - |a2|^2 = -1, <a1', i a1> - <a2', i a2> = 0,
/// and, for unit-speed curves, |a1'|^2 - |a2'|^2 = 1 and |a1| = |a2'|.
ResidualReport curve_constraint_residual(const CurveAdSLegendrian& curve, int n_samples);
/// For arclength curves the violation of |gamma'| = 1, otherwise zero.
ResidualReport curve_constraint_residual(const CurvePlanar& curve, int n_samples);

/// Reparametrizes by arclength. The new domain is [0, L].
CurvePlanar arclength_reparametrize(const CurvePlanar& curve, double tol = 1e-12);

}  // namespace lagsurf

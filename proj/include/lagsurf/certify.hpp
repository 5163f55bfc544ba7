#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lagsurf/core_types.hpp"

namespace lagsurf {

/// w + x i + y j + z k, Hamilton convention ij = k.
struct Quaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  Quaternion inverse() const;
};

Quaternion operator*(const Quaternion& a, const Quaternion& b);
Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion operator*(double s, const Quaternion& a);
double distance(const Quaternion& a, const Quaternion& b);

namespace quat {
inline const Quaternion one{1, 0, 0, 0};
inline const Quaternion i{0, 1, 0, 0};
inline const Quaternion j{0, 0, 1, 0};
inline const Quaternion k{0, 0, 0, 1};
}  // namespace quat

enum class QuatEval { Direct, ClosedForm };

/// u = p^-1 i p i - i p^-1 i p. Throws DomainError for p = 0.
Quaternion quat_u(const Quaternion& p, QuatEval method = QuatEval::Direct);
/// v = p^-1 i p + i p^-1 i p i = -u i.
Quaternion quat_v(const Quaternion& p, QuatEval method = QuatEval::Direct);

/// ((p0 p2 + p1 p3)^2 + (p1 p2 - p0 p3)^2, (p0^2 + p1^2)(p2^2 + p3^2)).
std::pair<double, double> factorization_identity(const Quaternion& p);

struct QuaternionReport {
  int samples = 0;
  std::uint64_t seed = 0;
  double max_u_error = 0.0;
  double max_v_error = 0.0;
  double max_v_minus_ui = 0.0;
  double max_factorization_error = 0.0;
  double max_norm_multiplicativity = 0.0;
};

/// Closed forms against direct products over seeded random unit quaternions.
QuaternionReport quaternion_identity_report(int samples = 1000, std::uint64_t seed = 20240601);

/// X = cos^2 alpha in [0, 1], Y >= 0.
struct CertificatePoint {
  double X = 0.0;
  double Y = 0.0;
};

/// Coefficients of E(X, Y) = sum_{a,b} e[b][a] X^a Y^b (b = power of Y).
const std::vector<std::vector<double>>& e_coefficients();
/// Weighted checksum of the coefficient table: sum (1 + a + 7 b) e[b][a].
double e_coefficient_checksum();

double eval_E(const CertificatePoint& pt);
double eval_E_X(const CertificatePoint& pt);
double eval_E_Y(const CertificatePoint& pt);
/// Throws EvaluationError carrying the denominator value at a pole.
double eval_g(const CertificatePoint& pt);
/// (1 - X) g E_X + 3 Y E_Y.
double eval_F(const CertificatePoint& pt);

/// Constants left by the X = 0 system after substituting k = sin(alpha)/r,
/// obtained by evaluating both equations at (sin alpha, r, w) and dividing by
/// sin(alpha)/r^2. Equal to (3 + 3 w^2, 5 + 3 w^2).
std::pair<double, double> x_zero_constants(double sin_alpha, double r, double w);

struct CertificateReport {
  double y_plus = 0.0, y_minus = 0.0;
  double e_at_plus = 0.0, e_at_minus = 0.0;
  double ey_at_plus = 0.0, ey_at_minus = 0.0;
  double f_at_plus = 0.0, f_at_minus = 0.0;
  double f_expected_plus = 0.0, f_expected_minus = 0.0;  // 1100 +- 85 sqrt(106)
  double f_rel_error_plus = 0.0, f_rel_error_minus = 0.0;
  double x_zero_min_first = 0.0, x_zero_min_second = 0.0;
  bool roots_simple = false;
  bool f_nonzero = false;
  bool x_zero_contradiction = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

CertificateReport nonexistence_certificate();

}  // namespace lagsurf

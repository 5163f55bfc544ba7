#include "lagsurf/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "lagsurf/core_types.hpp"

namespace lagsurf {

Quaternion Quaternion::inverse() const {
  const double n = norm2();
  if (!(n > 0.0)) throw DomainError("zero quaternion has no inverse");
  const Quaternion c = conj();
  return {c.w / n, c.x / n, c.y / n, c.z / n};
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
Quaternion operator-(const Quaternion& a, const Quaternion& b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }
Quaternion operator*(double s, const Quaternion& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
double distance(const Quaternion& a, const Quaternion& b) { return std::sqrt((a - b).norm2()); }

namespace {

// Coefficients valid for unit p; u and v are invariant under p -> lambda p.
std::pair<double, double> uv_coefficients(const Quaternion& p) {
  const double n = p.norm2();
  if (!(n > 0.0)) throw DomainError("quaternion p must be nonzero");
  return {4.0 * (p.w * p.y + p.x * p.z) / n, 4.0 * (p.x * p.y - p.w * p.z) / n};
}

}  // namespace

Quaternion quat_u(const Quaternion& p, QuatEval method) {
  if (method == QuatEval::ClosedForm) {
    const auto [a, b] = uv_coefficients(p);
    return {0.0, 0.0, a, -b};
  }
  const Quaternion pi = p.inverse();
  const Quaternion conj_i = pi * quat::i * p;
  return conj_i * quat::i - quat::i * conj_i;
}

Quaternion quat_v(const Quaternion& p, QuatEval method) {
  if (method == QuatEval::ClosedForm) {
    const auto [a, b] = uv_coefficients(p);
    return {0.0, 0.0, b, a};
  }
  const Quaternion pi = p.inverse();
  const Quaternion conj_i = pi * quat::i * p;
  return conj_i + quat::i * conj_i * quat::i;
}

std::pair<double, double> factorization_identity(const Quaternion& p) {
  const double a = p.w * p.y + p.x * p.z, b = p.x * p.y - p.w * p.z;
  return {a * a + b * b, (p.w * p.w + p.x * p.x) * (p.y * p.y + p.z * p.z)};
}

QuaternionReport quaternion_identity_report(int samples, std::uint64_t seed) {
  QuaternionReport r;
  r.samples = samples;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&] {
    Quaternion q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    const double n = std::sqrt(q.norm2());
    return (1.0 / n) * q;
  };
  for (int k = 0; k < samples; ++k) {
    const Quaternion p = draw(), q = draw();
    const Quaternion u = quat_u(p), v = quat_v(p);
    r.max_u_error = std::max(r.max_u_error, distance(u, quat_u(p, QuatEval::ClosedForm)));
    r.max_v_error = std::max(r.max_v_error, distance(v, quat_v(p, QuatEval::ClosedForm)));
    r.max_v_minus_ui = std::max(r.max_v_minus_ui, distance(v, -1.0 * (u * quat::i)));
    const auto [lhs, rhs] = factorization_identity(p);
    r.max_factorization_error = std::max(r.max_factorization_error, std::abs(lhs - rhs));
    const double pq = std::sqrt((p * q).norm2());
    r.max_norm_multiplicativity = std::max(r.max_norm_multiplicativity, std::abs(pq - 1.0));
  }
  return r;
}

const std::vector<std::vector<double>>& e_coefficients() {
  // Rows: powers of Y; columns: ascending powers of X.
  static const std::vector<std::vector<double>> table = {
      {35.0, 21.0, -489.0, 991.0, -774.0, 216.0},
      {4.0, 8.0, -264.0, 756.0, -504.0},
      {-12.0, 36.0, 90.0, -288.0},
  };
  return table;
}

double e_coefficient_checksum() {
  const auto& e = e_coefficients();
  double sum = 0.0;
  for (std::size_t b = 0; b < e.size(); ++b)
    for (std::size_t a = 0; a < e[b].size(); ++a) sum += (1.0 + a + 7.0 * b) * e[b][a];
  return sum;
}

namespace {

double horner(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

std::vector<double> derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t a = 1; a < c.size(); ++a) d.push_back(a * c[a]);
  return d;
}

}  // namespace

double eval_E(const CertificatePoint& pt) {
  const auto& e = e_coefficients();
  double v = 0.0;
  for (std::size_t b = e.size(); b-- > 0;) v = v * pt.Y + horner(e[b], pt.X);
  return v;
}

double eval_E_X(const CertificatePoint& pt) {
  const auto& e = e_coefficients();
  double v = 0.0;
  for (std::size_t b = e.size(); b-- > 0;) v = v * pt.Y + horner(derivative(e[b]), pt.X);
  return v;
}

double eval_E_Y(const CertificatePoint& pt) {
  const auto& e = e_coefficients();
  double v = 0.0;
  for (std::size_t b = e.size(); b-- > 1;) v = v * pt.Y + static_cast<double>(b) * horner(e[b], pt.X);
  return v;
}

double eval_g(const CertificatePoint& pt) {
  const double X = pt.X, Y = pt.Y;
  const double num = (5.0 + 19.0 * X + 12.0 * X * X) * (1.0 - X) + Y * (3.0 - 36.0 * X);
  const double den = (24.0 * X * X - 26.0 * X - 1.0) * (1.0 - X) + Y * (24.0 * X * X - 6.0 * X);
  if (std::abs(den) < 1e-14 * std::max(1.0, std::abs(num)))
    throw EvaluationError("g(X, Y) has a pole: denominator = " + std::to_string(den), X);
  return num / den;
}

double eval_F(const CertificatePoint& pt) {
  return (1.0 - pt.X) * eval_g(pt) * eval_E_X(pt) + 3.0 * pt.Y * eval_E_Y(pt);
}

std::pair<double, double> x_zero_constants(double sin_alpha, double r, double w) {
  if (sin_alpha == 0.0 || !(r > 0.0)) throw DomainError("x_zero_constants needs sin(alpha) != 0 and r > 0");
  const double k = sin_alpha / r;
  const double first = k * k / sin_alpha - 2.0 * k / r + 3.0 * k * w * w / r + 4.0 * sin_alpha / (r * r);
  const double second = k / r + 3.0 * w * w * sin_alpha / (r * r) + 4.0 * sin_alpha / (r * r);
  const double unit = sin_alpha / (r * r);
  return {first / unit, second / unit};
}

CertificateReport nonexistence_certificate() {
  CertificateReport rep;
  const double root = std::sqrt(106.0);
  rep.y_plus = (1.0 + root) / 6.0;
  rep.y_minus = (1.0 - root) / 6.0;
  const CertificatePoint pp{0.0, rep.y_plus}, pm{0.0, rep.y_minus};
  rep.e_at_plus = eval_E(pp);
  rep.e_at_minus = eval_E(pm);
  rep.ey_at_plus = eval_E_Y(pp);
  rep.ey_at_minus = eval_E_Y(pm);
  rep.f_at_plus = eval_F(pp);
  rep.f_at_minus = eval_F(pm);
  rep.f_expected_plus = 1100.0 + 85.0 * root;
  rep.f_expected_minus = 1100.0 - 85.0 * root;
  rep.f_rel_error_plus = std::abs(std::abs(rep.f_at_plus) - rep.f_expected_plus) / rep.f_expected_plus;
  rep.f_rel_error_minus = std::abs(std::abs(rep.f_at_minus) - std::abs(rep.f_expected_minus)) /
                          std::abs(rep.f_expected_minus);

  rep.roots_simple = std::abs(rep.ey_at_plus) > 10.0 && std::abs(rep.ey_at_minus) > 10.0;
  rep.f_nonzero = std::abs(rep.f_at_plus) > 1.0 && std::abs(rep.f_at_minus) > 1.0;

  // The X = 0 constants are bounded below by 3 and 5 for every real w.
  rep.x_zero_min_first = rep.x_zero_min_second = std::numeric_limits<double>::infinity();
  for (int k = -40; k <= 40; ++k) {
    const double w = 0.25 * k;
    const auto [a, b] = x_zero_constants(0.7, 1.3, w);
    rep.x_zero_min_first = std::min(rep.x_zero_min_first, a);
    rep.x_zero_min_second = std::min(rep.x_zero_min_second, b);
  }
  rep.x_zero_contradiction = rep.x_zero_min_first >= 3.0 - 1e-12 && rep.x_zero_min_second >= 5.0 - 1e-12;

  if (std::abs(rep.e_at_plus) > 1e-9) rep.failures.push_back("E(0, Y+) != 0");
  if (std::abs(rep.e_at_minus) > 1e-9) rep.failures.push_back("E(0, Y-) != 0");
  if (!rep.roots_simple) rep.failures.push_back("E(0, .) has a multiple root");
  if (!rep.f_nonzero) rep.failures.push_back("F vanishes at a root of E(0, .)");
  if (rep.f_rel_error_plus > 1e-6) rep.failures.push_back("|F(0, Y+)| differs from 1100 + 85 sqrt(106)");
  if (rep.f_rel_error_minus > 1e-6) rep.failures.push_back("|F(0, Y-)| differs from 1100 - 85 sqrt(106)");
  if (!rep.x_zero_contradiction) rep.failures.push_back("X = 0 system admits a real solution");
  return rep;
}

}  // namespace lagsurf

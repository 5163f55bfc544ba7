#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "lagsurf/core_types.hpp"

namespace lagsurf::numerics {

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const PointC2& p) { return norm(p); }
inline double magnitude(cplx z) { return std::abs(z); }

/// Single 16-point Gauss-Legendre panel on [a, b].
template <class T, class F>
T gauss16(const F& f, double a, double b) {
  using Rule = boost::math::quadrature::gauss<double, 16>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  // 16 is even: abscissa() holds the 8 positive nodes.
  T acc{};
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double dx = half * x[k];
    acc += w[k] * (f(mid - dx) + f(mid + dx));
  }
  acc *= half;
  return acc;
}

namespace detail {
template <class T, class F>
T adaptive_gl(const F& f, double a, double b, T whole, double tol, double floor, int depth) {
  const double m = 0.5 * (a + b);
  T left = gauss16<T>(f, a, m);
  T right = gauss16<T>(f, m, b);
  T both = left;
  both += right;
  T diff = both;
  diff -= whole;
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() * (magnitude(left) + magnitude(right));
  if (magnitude(diff) <= std::max({tol, noise, floor}) || depth <= 0 || !(b - a > 1e-14 * std::max(1.0, std::abs(a)))) {
    if (!std::isfinite(magnitude(both))) throw EvaluationError("non-finite integrand", m);
    return both;
  }
  T l = adaptive_gl(f, a, m, left, 0.5 * tol, floor, depth - 1);
  T r = adaptive_gl(f, m, b, right, 0.5 * tol, floor, depth - 1);
  l += r;
  return l;
}
}  // namespace detail

/// Adaptive composite Gauss-Legendre quadrature (16-point panels, bisection
/// until the panel estimate and its two halves agree to tol).
template <class T, class F>
T integrate(const F& f, double a, double b, double tol = 1e-10, int max_depth = 40) {
  if (a == b) return T{};
  if (b < a) {
    T r = integrate<T>(f, b, a, tol, max_depth);
    r *= -1.0;
    return r;
  }
  T whole = gauss16<T>(f, a, b);
  // Panels stop refining once they agree to roundoff of the whole integral.
  const double floor = 1e-15 * magnitude(whole);
  return detail::adaptive_gl(f, a, b, whole, tol, floor, max_depth);
}

/// Cumulative integral V(s) = int_{s0}^s f(u) du, tabulated at uniform knots
/// at construction; V(s) adds one adaptive panel from the nearest knot below.
/// Immutable after construction.
template <class T>
class CumulativeIntegral {
 public:
  using Integrand = std::function<T(double)>;

  CumulativeIntegral(Integrand f, Interval domain, double s0, int knots = 256, double tol = 1e-12)
      : f_(std::move(f)), domain_(domain), tol_(tol) {
    if (!domain.contains(s0, 1e-12)) throw DomainError("base point s0 outside the parameter domain");
    knots = std::max(knots, 2);
    h_ = domain.length() / (knots - 1);
    values_.resize(knots);
    values_[0] = T{};
    for (int k = 1; k < knots; ++k) {
      T step = integrate<T>(f_, knot(k - 1), knot(k), tol_ / knots);
      values_[k] = values_[k - 1];
      values_[k] += step;
    }
    offset_ = raw(s0);
  }

  T operator()(double s) const {
    T v = raw(s);
    v -= offset_;
    return v;
  }
  const Integrand& integrand() const { return f_; }

 private:
  double knot(int k) const { return domain_.lo + h_ * k; }
  T raw(double s) const {
    int k = static_cast<int>(std::floor((s - domain_.lo) / h_));
    k = std::clamp(k, 0, static_cast<int>(values_.size()) - 1);
    T v = values_[k];
    v += integrate<T>(f_, knot(k), s, tol_);
    return v;
  }

  Integrand f_;
  Interval domain_;
  double tol_;
  double h_ = 1.0;
  std::vector<T> values_;
  T offset_{};
};

// ---------------------------------------------------------------------------
// Quintic Hermite interpolation of sampled jets
// ---------------------------------------------------------------------------

/// Interpolates (value, d1, d2) samples with piecewise quintic Hermite
/// polynomials; the result matches value and both derivatives at the knots.
class QuinticHermite {
 public:
  QuinticHermite(std::vector<double> knots, std::vector<PlanarJet> samples);
  PlanarJet operator()(double s) const;
  Interval domain() const { return {knots_.front(), knots_.back()}; }

 private:
  std::vector<double> knots_;
  std::vector<PlanarJet> samples_;
};

// ---------------------------------------------------------------------------
// Parallel sweeps
// ---------------------------------------------------------------------------

/// Number of worker threads: hardware concurrency capped by LAGSURF_THREADS.
unsigned worker_count();

/// Runs body(i) for i in [0, n) over worker_count() threads. Each index is
/// visited exactly once; results must be written to disjoint slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lagsurf::numerics

#include "lagsurf/numerics.hpp"

#include <cstdlib>
#include <thread>

namespace lagsurf::numerics {

QuinticHermite::QuinticHermite(std::vector<double> knots, std::vector<PlanarJet> samples)
    : knots_(std::move(knots)), samples_(std::move(samples)) {
  if (knots_.size() < 2 || knots_.size() != samples_.size())
    throw DomainError("quintic Hermite needs at least two matching knots and samples");
  for (std::size_t k = 1; k < knots_.size(); ++k)
    if (!(knots_[k] > knots_[k - 1])) throw DomainError("quintic Hermite knots must increase strictly");
}

PlanarJet QuinticHermite::operator()(double s) const {
  auto it = std::upper_bound(knots_.begin(), knots_.end(), s);
  std::size_t k = it == knots_.begin() ? 0 : static_cast<std::size_t>(it - knots_.begin()) - 1;
  k = std::min(k, knots_.size() - 2);
  const double h = knots_[k + 1] - knots_[k];
  const double u = (s - knots_[k]) / h;
  const PlanarJet& a = samples_[k];
  const PlanarJet& b = samples_[k + 1];

  // Basis polynomials on [0,1] and their first two derivatives.
  const double u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u;
  const double h0 = 1 - 10 * u3 + 15 * u4 - 6 * u5;
  const double h1 = u - 6 * u3 + 8 * u4 - 3 * u5;
  const double h2 = 0.5 * (u2 - 3 * u3 + 3 * u4 - u5);
  const double h3 = 0.5 * (u3 - 2 * u4 + u5);
  const double h4 = -4 * u3 + 7 * u4 - 3 * u5;
  const double h5 = 10 * u3 - 15 * u4 + 6 * u5;

  const double d_h0 = -30 * u2 + 60 * u3 - 30 * u4;
  const double d_h1 = 1 - 18 * u2 + 32 * u3 - 15 * u4;
  const double d_h2 = 0.5 * (2 * u - 9 * u2 + 12 * u3 - 5 * u4);
  const double d_h3 = 0.5 * (3 * u2 - 8 * u3 + 5 * u4);
  const double d_h4 = -12 * u2 + 28 * u3 - 15 * u4;
  const double d_h5 = 30 * u2 - 60 * u3 + 30 * u4;

  const double dd_h0 = -60 * u + 180 * u2 - 120 * u3;
  const double dd_h1 = -36 * u + 96 * u2 - 60 * u3;
  const double dd_h2 = 0.5 * (2 - 18 * u + 36 * u2 - 20 * u3);
  const double dd_h3 = 0.5 * (6 * u - 24 * u2 + 20 * u3);
  const double dd_h4 = -24 * u + 84 * u2 - 60 * u3;
  const double dd_h5 = 60 * u - 180 * u2 + 120 * u3;

  const cplx v0 = a.d1 * h, v1 = b.d1 * h;
  const cplx c0 = a.d2 * (h * h), c1 = b.d2 * (h * h);

  PlanarJet out;
  out.value = h0 * a.value + h1 * v0 + h2 * c0 + h3 * c1 + h4 * v1 + h5 * b.value;
  out.d1 = (d_h0 * a.value + d_h1 * v0 + d_h2 * c0 + d_h3 * c1 + d_h4 * v1 + d_h5 * b.value) / h;
  out.d2 = (dd_h0 * a.value + dd_h1 * v0 + dd_h2 * c0 + dd_h3 * c1 + dd_h4 * v1 + dd_h5 * b.value) / (h * h);
  return out;
}

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("LAGSURF_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < n; i += workers) body(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace lagsurf::numerics

#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include "lagsurf/numerics.hpp"

namespace lagsurf::numerics {

// ---------------------------------------------------------------------------
// ODE integration with dense output and event location
// ---------------------------------------------------------------------------

struct OdeOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  double initial_step = 1e-3;
  double max_step = 0.05;
  /// Spacing of the recorded samples (dense output); the final point is always recorded.
  double sample_step = 0.01;
};

template <std::size_t N>
struct EventSpec {
  using State = std::array<double, N>;
  std::function<double(double, const State&)> g;
  /// +1: rising (g from < 0 to >= 0), -1: falling, 0: either.
  int direction = 0;
  /// Stop integration at the n-th occurrence (0 = never stop).
  int stop_after = 0;
};

template <std::size_t N>
struct EventHit {
  int event = 0;
  double s = 0.0;
  std::array<double, N> y{};
};

template <std::size_t N>
struct Trajectory {
  std::vector<double> s;
  std::vector<std::array<double, N>> y;
  std::vector<EventHit<N>> events;
  bool truncated = false;
  std::string diagnostic;
};

/// Integrates y' = rhs(s, y) with the Dormand-Prince 5(4) pair and dense
/// output, recording samples every options.sample_step and locating events
/// on the dense interpolant. `valid` is checked on every accepted step; a
/// failing state truncates the trajectory at the previous step.
template <std::size_t N, class Rhs>
Trajectory<N> integrate_ode(const Rhs& rhs, std::array<double, N> y0, double s0, double s_end,
                            const OdeOptions& options, const std::vector<EventSpec<N>>& events = {},
                            const std::function<std::optional<std::string>(const std::array<double, N>&)>& valid = {}) {
  using State = std::array<double, N>;
  namespace odeint = boost::numeric::odeint;
  using Base = odeint::runge_kutta_dopri5<State>;
  auto system = [&rhs](const State& y, State& dy, double s) { dy = rhs(s, y); };

  Trajectory<N> out;
  out.s.push_back(s0);
  out.y.push_back(y0);
  if (!(s_end > s0)) return out;

  auto stepper = odeint::make_dense_output(options.abs_tol, options.rel_tol, options.max_step, Base());
  stepper.initialize(y0, s0, std::min(options.initial_step, s_end - s0));

  std::vector<int> counts(events.size(), 0);
  std::vector<double> g_prev(events.size());
  for (std::size_t e = 0; e < events.size(); ++e) g_prev[e] = events[e].g(s0, y0);

  double next_sample = s0 + options.sample_step;
  State y_tmp;
  auto state_at = [&](double s) {
    stepper.calc_state(s, y_tmp);
    return y_tmp;
  };

  while (stepper.current_time() < s_end) {
    const auto [sa, sb_raw] = stepper.do_step(system);
    const State& yb = stepper.current_state();
    bool finite = true;
    for (double v : yb) finite = finite && std::isfinite(v);
    std::optional<std::string> bad;
    if (!finite) bad = "non-finite state";
    else if (valid) bad = valid(yb);
    if (bad) {
      out.truncated = true;
      out.diagnostic = *bad + " near s = " + std::to_string(sb_raw);
      break;
    }
    const double sb = std::min(sb_raw, s_end);

    // Earliest stopping event inside (sa, sb].
    double stop_at = sb;
    std::optional<EventHit<N>> stop_hit;
    for (std::size_t e = 0; e < events.size(); ++e) {
      const double ga = g_prev[e];
      const double gb = events[e].g(sb, state_at(sb));
      const bool rising = ga < 0.0 && gb >= 0.0;
      const bool falling = ga > 0.0 && gb <= 0.0;
      const int dir = events[e].direction;
      if ((dir >= 0 && rising) || (dir <= 0 && falling)) {
        auto gfun = [&](double s) { return events[e].g(s, state_at(s)); };
        boost::math::tools::eps_tolerance<double> tol(50);
        std::uintmax_t iters = 100;
        auto br = boost::math::tools::toms748_solve(gfun, sa, sb, ga, gb, tol, iters);
        const double se = 0.5 * (br.first + br.second);
        EventHit<N> hit{static_cast<int>(e), se, state_at(se)};
        ++counts[e];
        out.events.push_back(hit);
        if (events[e].stop_after > 0 && counts[e] >= events[e].stop_after && se <= stop_at) {
          stop_at = se;
          stop_hit = hit;
        }
      }
      g_prev[e] = gb;
    }
    std::sort(out.events.begin(), out.events.end(), [](const auto& a, const auto& b) { return a.s < b.s; });

    while (next_sample < stop_at - 1e-12 * std::max(1.0, std::abs(stop_at))) {
      out.s.push_back(next_sample);
      out.y.push_back(state_at(next_sample));
      next_sample += options.sample_step;
    }
    if (stop_hit) {
      // Drop events recorded past the stopping point within this step.
      std::erase_if(out.events, [&](const auto& h) { return h.s > stop_at; });
      out.s.push_back(stop_at);
      out.y.push_back(stop_hit->y);
      return out;
    }
    if (sb >= s_end) {
      out.s.push_back(s_end);
      out.y.push_back(state_at(s_end));
      return out;
    }
  }
  if (out.truncated) return out;
  out.s.push_back(s_end);
  out.y.push_back(state_at(s_end));
  return out;
}

}  // namespace lagsurf::numerics

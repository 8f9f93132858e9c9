#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lacunary/context.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/expansion.hpp"
#include "lacunary/saddles.hpp"

namespace lacunary {

// Complex-argument analysis.  Writing x = |x| e^{i theta}, adjacent saddles
// s_k, s_{k+1} (k >= 1) connect at a critical phase theta* where
// Im psi(s_k) = Im psi(s_{k+1}); crossing it changes the number K(theta) of
// saddles in Re s > 0 that contribute to the expansion.

struct stokes_options {
  double theta_floor = 3e-3;   // lowest theta (radians) examined
  double sweep_step = pi / 256;
  double tol = 1e-8;           // bisection width in theta
};

/// Critical phase where saddles s_k and s_{k+1} connect, tracked
/// continuously in theta downward from pi/2.  Empty when the pair does not
/// connect above the floor.
inline std::optional<double> stokes_angle(int k, long n, double abs_x,
                                          const stokes_options& opts = {}) {
  if (k < 1) throw domain_error("stokes_angle: pair index k must be >= 1");
  if (!(abs_x > 1.0)) throw domain_error("stokes_angle: |x| must exceed 1");

  auto make_ctx = [&](double theta) { return problem_context(n, std::polar(abs_x, theta)); };
  auto imbalance = [&](const saddle& lo, const saddle& hi) {
    return (lo.psi_s - hi.psi_s).imag();
  };

  problem_context ctx = make_ctx(pi / 2);
  saddle lo = saddle_at(k, ctx);
  saddle hi = saddle_at(k + 1, ctx);
  double theta_prev = pi / 2;
  double h_prev = imbalance(lo, hi);

  for (double theta = pi / 2 - opts.sweep_step; theta > opts.theta_floor;
       theta -= opts.sweep_step) {
    ctx = make_ctx(theta);
    saddle lo_new = saddle_refine(lo.s, ctx, k);
    saddle hi_new = saddle_refine(hi.s, ctx, k + 1);
    const double h = imbalance(lo_new, hi_new);

    if (h == 0.0) return theta;
    if (h * h_prev < 0.0) {
      // bracketed: bisect, reseeding each midpoint from the nearer endpoint
      double ta = theta, tb = theta_prev;
      saddle la = lo_new, ha = hi_new, lb = lo, hb = hi;
      double fa = h;
      while (tb - ta > opts.tol) {
        const double tm = 0.5 * (ta + tb);
        problem_context cm = make_ctx(tm);
        const bool from_a = (tm - ta) <= (tb - tm);
        saddle lm = saddle_refine(from_a ? la.s : lb.s, cm, k);
        saddle hm = saddle_refine(from_a ? ha.s : hb.s, cm, k + 1);
        const double fm = imbalance(lm, hm);
        if (fm == 0.0) return tm;
        if (fm * fa > 0.0) {
          ta = tm; la = lm; ha = hm; fa = fm;
        } else {
          tb = tm; lb = lm; hb = hm;
        }
      }
      return 0.5 * (ta + tb);
    }

    lo = lo_new;
    hi = hi_new;
    h_prev = h;
    theta_prev = theta;
  }
  return std::nullopt;
}

struct stokes_event {
  int k = 0;           // the pair (k, k+1)
  double theta_star = 0.0;
};

struct stokes_chart {
  long n = 0;
  double abs_x = 0.0;
  std::vector<stokes_event> events;  // ordered k = 1, 2, ...
  int k_pairs_max = 0;
  bool saturated = false;  // a pair failed to connect above the floor
};

inline stokes_chart build_chart(long n, double abs_x, int k_pairs,
                                const stokes_options& opts = {}) {
  stokes_chart chart;
  chart.n = n;
  chart.abs_x = abs_x;
  chart.k_pairs_max = k_pairs;
  for (int k = 1; k <= k_pairs; ++k) {
    auto theta = stokes_angle(k, n, abs_x, opts);
    if (!theta) {
      chart.saturated = true;
      break;
    }
    if (!chart.events.empty() && *theta >= chart.events.back().theta_star)
      throw error("build_chart: theta* failed to decrease at pair k=" + std::to_string(k));
    chart.events.push_back({k, *theta});
  }
  return chart;
}

/// K(theta): number of contributing saddles in Re s > 0.  Transitions occur
/// only at the charted theta* values; a theta exactly on a boundary is
/// assigned the smaller count.
inline int contributing_count(double theta, const stokes_chart& chart) {
  if (!(theta > 0.0) || theta > pi / 2 + 1e-12)
    throw domain_error("contributing_count: theta must lie in (0, pi/2]");
  int m = 1;
  for (const auto& ev : chart.events) {
    if (theta >= ev.theta_star) return m;
    ++m;
  }
  if (chart.saturated || static_cast<int>(chart.events.size()) < chart.k_pairs_max) return m;
  throw insufficient_chart_error(
      "contributing_count: chart does not extend below theta; need pair (" + std::to_string(m) +
          ", " + std::to_string(m + 1) + ")",
      m);
}

/// Expansion for complex x with 0 <= arg x <= pi/2:
///   wp_n(x^{-2}) ~ sum_{k=k_min}^{K(theta)} J_k,
/// with K(theta) found by on-demand Stokes-angle computation and k_min cut
/// adaptively where |J_k| < 1e-16 max_k |J_k|.
inline expansion_result expand_complex(const problem_context& ctx, int j_max = 3) {
  // at theta = 0 the real-x assembly applies, with the same uniform
  // truncation order at every saddle that the complex branch uses
  if (ctx.real_x()) return expand_real(ctx, j_max, -1, j_max);
  const double theta = ctx.theta();
  if (theta < 0.0)
    throw domain_error("expand_complex: arg x must be nonnegative (conjugate the result)");
  if (j_max < 0 || j_max > 3) throw domain_error("expand_complex: j_max must be in 0..3");

  std::map<long, saddle_contribution> parts;
  auto at = [&](long k) -> const saddle_contribution& {
    auto it = parts.find(k);
    if (it == parts.end()) it = parts.emplace(k, detail::contribution_at(k, j_max, ctx)).first;
    return it->second;
  };

  double max_abs = std::abs(at(0).value);

  // upward: k = 1 always enters; each further saddle enters only below the
  // connection angle of the preceding pair, and the climb stops once the
  // candidate magnitude is negligible anyway
  long k_top = 1;
  max_abs = std::max(max_abs, std::abs(at(1).value));
  for (;;) {
    const long cand = k_top + 1;
    const auto& jc = at(cand);
    if (std::abs(jc.value) < 1e-16 * max_abs) {
      parts.erase(cand);
      break;
    }
    auto theta_star = stokes_angle(static_cast<int>(k_top), ctx.n, std::abs(ctx.x));
    if (!theta_star || theta >= *theta_star) {
      parts.erase(cand);
      break;
    }
    max_abs = std::max(max_abs, std::abs(jc.value));
    k_top = cand;
  }

  // downward from k = 0
  long k_bot = 0;
  for (long k = -1; k >= -400; --k) {
    const auto& jc = at(k);
    if (std::abs(jc.value) < 1e-16 * max_abs) {
      parts.erase(k);
      break;
    }
    max_abs = std::max(max_abs, std::abs(jc.value));
    k_bot = k;
  }

  expansion_result res;
  complex total{0.0, 0.0};
  long arg_max = 0;
  double best = -1.0;
  for (const auto& [k, jc] : parts) {
    total += jc.value;
    res.contributions.push_back(jc);
    if (std::abs(jc.value) > best) {
      best = std::abs(jc.value);
      arg_max = k;
    }
  }
  res.total = total;
  res.k_min_used = k_bot;
  res.k_max_used = k_top;
  res.truncation_note = "K(theta)=" + std::to_string(k_top) + ", k_min=" + std::to_string(k_bot);
  if (arg_max == k_bot)
    res.truncation_note +=
        "; warning: dominant |J_k| sits at the adaptive k_min boundary, tail may be truncated";
  return res;
}

/// Per-saddle magnitude profile (k, log10 |J_k|) over an index range.
inline std::vector<std::pair<long, double>> contribution_profile(const problem_context& ctx,
                                                                 long k_min, long k_max,
                                                                 int j_max = 3) {
  if (k_min > k_max) throw domain_error("contribution_profile: empty range");
  std::vector<std::pair<long, double>> out;
  out.reserve(static_cast<std::size_t>(k_max - k_min + 1));
  for (long k = k_min; k <= k_max; ++k) {
    const auto jc = detail::contribution_at(k, j_max, ctx);
    out.emplace_back(k, jc.log_abs / std::log(10.0));
  }
  return out;
}

}  // namespace lacunary

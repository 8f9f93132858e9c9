#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "lacunary/coeffs.hpp"
#include "lacunary/context.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/saddles.hpp"

namespace lacunary {

// Per-saddle contributions
//
//   J_k ~ e^{-n psi(s_k)} / sqrt(1 + omega_k)
//         * sum_{j=0}^{j_max} (1/2)_j c_{jk} / (log n)^j
//
// and their assembly into the full expansion for real x > 1,
//
//   wp_n(x^{-2}) = J_0 + 2 Re sum_{k>=1} J_k,
//
// plus the two coarser closed-form approximations (via r(n) and via the
// Lambert W function).

inline constexpr std::array<double, 4> pochhammer_half = {1.0, 0.5, 0.75, 1.875};

struct saddle_contribution {
  long k = 0;
  complex value;      // J_k
  complex prefactor;  // e^{-n psi(s_k)} / sqrt(1 + omega_k)
  std::vector<complex> series_terms;
  int j_max = 0;
  double log_abs = 0.0;        // log |J_k|, computed without forming exp when huge
  bool series_monotone = true; // |terms| strictly decreasing (flag only)
};

struct expansion_result {
  complex total{0.0, 0.0};
  std::vector<saddle_contribution> contributions;
  long k_min_used = 0;
  long k_max_used = 0;
  std::string truncation_note;
};

/// The branch of the Lambert W function with W >= 0 for a >= 0: the unique
/// t >= 0 such that t e^t = a.
inline double lambert_w(double a) {
  if (a < 0.0) throw domain_error("lambert_w: argument must be nonnegative");
  if (a == 0.0) return 0.0;
  double t = (a > std::numbers::e) ? std::log(a) - std::log(std::log(a)) : std::log1p(a);
  for (int it = 0; it < 60; ++it) {
    const double et = std::exp(t);
    const double f = t * et - a;
    const double step = f / (et * (1.0 + t));
    t -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(t))) break;
  }
  return t;
}

/// Positive solution of t (e^t + sqrt(y)) = n sqrt(y) log y, the height of
/// the imaginary-axis saddle.  Bisection bracket, Newton polish.
inline double r_of_n(long n, double y) {
  if (!(y > 1.0)) throw domain_error("r_of_n: y must exceed 1");
  if (n < 1) throw domain_error("r_of_n: n must be positive");
  const double sy = std::sqrt(y);
  const double target = static_cast<double>(n) * sy * std::log(y);
  auto f = [&](double t) { return t * (std::exp(t) + sy) - target; };

  double lo = 0.0, hi = 1.0;
  while (f(hi) < 0.0) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    const double et = std::exp(t);
    t -= (t * (et + sy) - target) / (et * (1.0 + t) + sy);
  }
  return t;
}

/// Assemble one J_k from a refined saddle and its coefficient set.
inline saddle_contribution contribution(const saddle& sad, const coefficient_set& cs, int j_max,
                                        const problem_context& ctx) {
  if (j_max < 0 || j_max > 3) throw domain_error("contribution: j_max must be in 0..3");
  const complex one_plus_omega = 1.0 + sad.q.omega;
  if (std::abs(one_plus_omega) < 1e-14)
    throw degenerate_error("contribution: 1 + omega = 0 at k=" + std::to_string(sad.k));

  // log of the prefactor; exponentiated once so that magnitudes up to the
  // full binary64 range survive intermediate arithmetic
  const complex w = -static_cast<double>(ctx.n) * sad.psi_s - 0.5 * std::log(one_plus_omega);

  saddle_contribution out;
  out.k = sad.k;
  out.j_max = j_max;
  const double logn = std::log(static_cast<double>(ctx.n));
  complex series{0.0, 0.0};
  double prev_mag = 0.0;
  for (int j = 0; j <= j_max; ++j) {
    const complex term = pochhammer_half[j] * cs.c[j] / std::pow(logn, j);
    out.series_terms.push_back(term);
    series += term;
    const double mag = std::abs(term);
    if (j > 0 && mag >= prev_mag) out.series_monotone = false;
    prev_mag = mag;
  }

  out.log_abs = w.real() + std::log(std::abs(series));
  if (w.real() > 705.0)
    throw range_error("contribution: prefactor exceeds binary64 range (log|J| = " +
                          std::to_string(out.log_abs) + ")",
                      sad.k);
  out.prefactor = std::exp(w);
  out.value = out.prefactor * series;
  return out;
}

namespace detail {

inline saddle_contribution contribution_at(long k, int j_max, const problem_context& ctx) {
  const saddle sad = saddle_at(k, ctx);
  return contribution(sad, c_coefficients(sad.q, ctx), j_max, ctx);
}

}  // namespace detail

/// Full expansion for real x > 1.  The dominant (k = 0) sum is truncated at
/// j_max; sums with k >= 1 at j_max_tail.  The default tail order 0 is the
/// convention the reference tables were generated with (checked against
/// contour quadrature of J_1: higher tail orders are closer to the true
/// J_1 but move the assembled total off the published digits).  k_max < 0
/// selects automatic truncation: stop at the first k whose |J_k| falls
/// below 1e-16 |J_0|.
inline expansion_result expand_real(const problem_context& ctx, int j_max = 3, long k_max = -1,
                                    int j_max_tail = 0) {
  if (!ctx.real_x()) throw domain_error("expand_real: x must be real (use expand_complex)");
  if (j_max < 0 || j_max > 3) throw domain_error("expand_real: j_max must be in 0..3");
  if (j_max_tail < 0 || j_max_tail > 3)
    throw domain_error("expand_real: j_max_tail must be in 0..3");

  expansion_result res;
  res.contributions.push_back(detail::contribution_at(0, j_max, ctx));
  const double j0_mag = std::abs(res.contributions[0].value);
  complex total = res.contributions[0].value;

  const bool auto_k = k_max < 0;
  const long hard_cap = auto_k ? 64 : k_max;
  long k = 1;
  for (; k <= hard_cap; ++k) {
    auto jk = detail::contribution_at(k, j_max_tail, ctx);
    res.contributions.push_back(jk);
    total += 2.0 * jk.value.real();
    if (auto_k && std::abs(jk.value) < 1e-16 * j0_mag) break;
  }

  res.total = total;
  res.k_max_used = std::min(k, hard_cap);
  res.k_min_used = -res.k_max_used;  // negative k enter through the 2 Re fold
  res.truncation_note = "j<=" + std::to_string(j_max) + " at k=0, j<=" +
                        std::to_string(j_max_tail) + " for k>=1; " +
                        (auto_k ? "k cut automatically at |J_k| < 1e-16 |J_0|"
                                : "k_max fixed by caller");
  return res;
}

/// The r(n)-based closed-form approximation
///   (1/sqrt(r)) exp((r^2 + 2r)/(2 log y)) Theta(y),
/// Theta(y) = 1 + 2 sum_{k>=1} e^{-2 pi^2 k^2 / log y} cos(2 pi k r / log y),
/// truncated when the exponential factor drops below 1e-30.
inline double gn_approx(long n, double y) {
  const double r = r_of_n(n, y);
  const double logy = std::log(y);
  double theta = 1.0;
  for (int k = 1;; ++k) {
    const double damp = std::exp(-2.0 * pi * pi * k * k / logy);
    if (damp < 1e-30) break;
    theta += 2.0 * damp * std::cos(2.0 * pi * k * r / logy);
  }
  const double log_value = (r * r + 2.0 * r) / (2.0 * logy) - 0.5 * std::log(r) + std::log(theta);
  if (log_value > 709.0)
    throw range_error("gn_approx: value exceeds binary64 range (log10 = " +
                          std::to_string(log_value / std::log(10.0)) + ")",
                      n);
  return std::exp(log_value);
}

/// The Lambert-W conjecture form (1/sqrt(w)) exp((w^2 + 2w)/(2 log y)) with
/// w = W(n sqrt(y) log y).
inline double conjecture_approx(long n, double y) {
  if (!(y > 1.0)) throw domain_error("conjecture_approx: y must exceed 1");
  const double w = lambert_w(static_cast<double>(n) * std::sqrt(y) * std::log(y));
  const double logy = std::log(y);
  const double log_value = (w * w + 2.0 * w) / (2.0 * logy) - 0.5 * std::log(w);
  if (log_value > 709.0)
    throw range_error("conjecture_approx: value exceeds binary64 range (log10 = " +
                          std::to_string(log_value / std::log(10.0)) + ")",
                      n);
  return std::exp(log_value);
}

}  // namespace lacunary

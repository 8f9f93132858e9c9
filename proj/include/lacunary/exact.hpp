#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>

#include "lacunary/context.hpp"
#include "lacunary/detail/numeric.hpp"
#include "lacunary/detail/quadrature.hpp"
#include "lacunary/errors.hpp"

namespace lacunary {

struct eval_result {
  complex value{0.0, 0.0};
  long term_count = 0;
  /// sum of term magnitudes over |value|; 1 means no cancellation
  double condition = 1.0;
};

/// Exact binomial coefficient via 64-bit integer arithmetic.  Intended for
/// oracle duty at small n; throws once the intermediate product would no
/// longer be exact in uint64 (n > 62).
inline double binomial_exact(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n > 60) throw domain_error("binomial_exact: n too large for exact 64-bit evaluation");
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // exact at every step: r * (n-k+i) is divisible by i
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return static_cast<double>(r);
}

namespace detail {

template <class Acc>
eval_result eval_direct_impl(long n, complex z) {
  if (n < 0) throw domain_error("eval_direct: n must be nonnegative");

  Acc acc;
  detail::neumaier abs_acc;

  double binom = 1.0;    // C(n, k)
  complex zk{1.0, 0.0};  // z^k
  complex pw{1.0, 0.0};  // z^{k(k-1)/2}
  for (long k = 0; k <= n; ++k) {
    const complex term = binom * pw;
    if (!std::isfinite(std::abs(term)) || !std::isfinite(binom)) {
      throw range_error("eval_direct: term magnitude overflowed binary64 at k=" + std::to_string(k), k);
    }
    acc.add(term);
    abs_acc.add(std::abs(term));
    binom *= static_cast<double>(n - k) / static_cast<double>(k + 1);
    pw *= zk;  // exponent grows by k between consecutive terms
    zk *= z;
  }

  eval_result r;
  r.value = acc.value();
  r.term_count = n + 1;
  const double av = std::abs(r.value);
  r.condition = (av == 0.0) ? std::numeric_limits<double>::infinity()
                            : std::max(1.0, abs_acc.value() / av);
  return r;
}

}  // namespace detail

/// Direct summation of the lacunary binomial sum
///   sum_{k=0}^{n} C(n,k) z^{k(k-1)/2}
/// with Neumaier-compensated accumulation.  Binomials use the multiplicative
/// recurrence in binary64; powers advance by one complex multiply per term.
inline eval_result eval_direct(long n, complex z) {
  return detail::eval_direct_impl<detail::neumaier_complex>(n, z);
}

/// Same sum accumulated in double-double.  Worth using for complex z near
/// the unit circle with arg z near pi, where cancellation inflates the
/// condition number of the plain compensated sum.
inline eval_result eval_direct_dd(long n, complex z) {
  return detail::eval_direct_impl<detail::dd_complex_sum>(n, z);
}

namespace detail {

/// Height of the dominant saddle of the integral representation: the
/// positive root of t (e^t + |x|) = 2 n |x| |log x|.  For real x this is
/// exactly Im s_0.
inline double dominant_saddle_height(const problem_context& ctx) {
  const double ax = std::abs(ctx.x);
  const double target = 2.0 * static_cast<double>(ctx.n) * ax * std::abs(ctx.logx);
  auto f = [&](double t) { return t * (std::exp(t) + ax) - target; };
  double lo = 0.0, hi = 1.0;
  while (f(hi) < 0.0) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 6; ++it)
    t -= (t * (std::exp(t) + ax) - target) / (std::exp(t) * (1.0 + t) + ax);
  return t;
}

}  // namespace detail

/// Evaluate through the Gaussian-kernel integral representation
///   (2 sqrt(pi log x))^{-1} \int exp(-s^2/(4 log x)) (1 + x e^{is})^n ds.
///
/// The integrand is entire, so the line of integration may be shifted
/// without changing the value.  On the real axis the modulus peaks at
/// (1+|x|)^n while the integral itself is exponentially smaller, which no
/// fixed-precision rule can survive; on the horizontal line through the
/// dominant-saddle height the integrand is non-oscillatory and the rule
/// converges to full working precision.  Truncated where the Gaussian
/// factor falls below 1e-30 of its on-line peak.  Independent of
/// eval_direct by construction.
inline complex eval_quadrature(const problem_context& ctx, double rel_tol = 1e-12) {
  const double h = detail::dominant_saddle_height(ctx);
  const complex inv4 = 1.0 / (4.0 * ctx.logx);
  const double a = inv4.real();  // > 0 for |x| > 1
  const double b = inv4.imag();

  // |exp(-(t+ih)^2/(4 log x))| = exp(-a t^2 + 2 b h t + a h^2): a Gaussian
  // in t centred at t* = b h / a
  const double t_peak = b * h / a;
  const double half_width = std::sqrt(30.0 * std::log(10.0) / a);

  auto f = [&](double t) {
    const complex s{t, h};
    const complex u = ctx.x * std::exp(iu * s);
    return std::exp(-s * s * inv4) * detail::pow_int(1.0 + u, ctx.n);
  };

  // phase rates along the line: the binomial factor oscillates at up to
  // ~ n q/(1-q) with q = |x| e^{-h}, the Gaussian kernel at ~ (|t|+h)/|2 log x|
  const double q_mod = std::min(0.95, std::abs(ctx.x) * std::exp(-h));
  const double rate = static_cast<double>(ctx.n) * q_mod / (1.0 - q_mod) +
                      (half_width + std::abs(t_peak) + h) / (2.0 * std::abs(ctx.logx));
  const int panels =
      static_cast<int>(std::min(20000.0, std::max(16.0, 2.0 * half_width * rate / pi)));

  auto q = detail::integrate_adaptive(f, t_peak - half_width, t_peak + half_width, rel_tol, 0.0,
                                      panels);
  const complex result = q.value / (2.0 * std::sqrt(pi * ctx.logx));
  const double scale = std::abs(q.value);
  if (scale > 0.0 && q.error > 100.0 * rel_tol * scale) {
    throw quadrature_error(
        "eval_quadrature: adaptive rule did not reach the requested tolerance "
        "(achieved relative error estimate " +
            std::to_string(q.error / scale) + ")",
        q.error / scale);
  }
  return result;
}

}  // namespace lacunary

#pragma once

#include <climits>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "lacunary/context.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/phase.hpp"

namespace lacunary {

/// One refined stationary point of the phase, with everything downstream
/// consumers need precomputed.
struct saddle {
  long k = 0;
  complex s;          // refined location
  complex sigma;      // s - 2 pi k
  saddle_quantities q;
  complex psi_s;      // psi(s)
  complex psi_sigma;  // psi(sigma)
  complex ddpsi;      // psi''(s)
  double residual = 0.0;
  complex guess;      // pre-refinement location
};

/// Large-n perturbative location of the k-th saddle,
///
///   s_k ~ 2 pi k + i log(n alpha / log n)
///               - i log(1 - (log log n + 2 pi i k)/log n),
///
/// with alpha = 2 x log x.  Good for 2 pi |k| below about log n; outside
/// that range refinement falls back to continuation from the neighbour.
inline complex saddle_guess(long k, const problem_context& ctx) {
  const double L = std::log(std::max(static_cast<double>(ctx.n), 2.0));
  const double M = std::log(L);
  const complex head = std::log(ctx.alpha * (static_cast<double>(ctx.n) / L));
  const complex tail = std::log(1.0 - (M + 2.0 * pi * static_cast<double>(k) * iu) / L);
  return 2.0 * pi * static_cast<double>(k) + iu * head - iu * tail;
}

namespace detail {

inline double newton_tol(complex s, const problem_context& ctx) {
  return 1e-13 * std::max(1.0, std::abs(s) / (2.0 * ctx.n * std::abs(ctx.logx)));
}

}  // namespace detail

/// Damped Newton refinement of psi'(s) = 0 from a guess.  The step is
/// halved while the residual fails to decrease; convergence requires
/// |psi'(s)| < 1e-13 * max(1, |s| / (2 n |log x|)).  A drift of more than
/// pi in Re s from the guess means the iteration hopped to a neighbouring
/// saddle and is reported as a basin escape.
inline saddle saddle_refine(complex guess, const problem_context& ctx, long expected_k = LONG_MIN) {
  complex s = guess;
  complex f = psi_derivative(s, 1, ctx);
  bool converged = std::abs(f) < detail::newton_tol(s, ctx);

  for (int it = 0; it < 60 && !converged; ++it) {
    const complex fp = psi_derivative(s, 2, ctx);
    if (std::abs(fp) < 1e-300)
      throw degenerate_error("saddle_refine: psi'' vanished during iteration");
    const complex full_step = f / fp;
    double damp = 1.0;
    complex s_new = s - full_step;
    complex f_new = psi_derivative(s_new, 1, ctx);
    int halvings = 0;
    while (std::abs(f_new) >= std::abs(f) && halvings < 30) {
      damp *= 0.5;
      s_new = s - damp * full_step;
      f_new = psi_derivative(s_new, 1, ctx);
      ++halvings;
    }
    if (halvings == 30 && std::abs(f_new) >= std::abs(f)) break;  // stagnated
    s = s_new;
    f = f_new;
    converged = std::abs(f) < detail::newton_tol(s, ctx);
  }

  if (!converged)
    throw convergence_error("saddle_refine: no convergence in 60 iterations (residual " +
                                std::to_string(std::abs(f)) + ")",
                            s, std::abs(f));

  const long k = (expected_k != LONG_MIN) ? expected_k : std::lround(s.real() / (2.0 * pi));
  if (std::abs(s.real() - guess.real()) > pi)
    throw basin_escape_error("saddle_refine: converged outside the basin of k=" + std::to_string(k),
                             s, k);

  saddle out;
  out.k = k;
  out.s = s;
  out.sigma = s - 2.0 * pi * static_cast<double>(k);
  out.q = saddle_quantities::at(s, ctx);
  out.psi_s = psi(s, ctx);
  out.psi_sigma = psi(out.sigma, ctx);
  out.ddpsi = psi_derivative(s, 2, ctx);
  out.residual = std::abs(f);
  out.guess = guess;
  return out;
}

/// Guess-then-refine for a single index, with continuation fallback: when
/// the direct guess fails, the neighbour one step closer to k = 0 is
/// refined first and its location, shifted by 2 pi, seeds the retry.
inline saddle saddle_at(long k, const problem_context& ctx, int depth = 0) {
  try {
    return saddle_refine(saddle_guess(k, ctx), ctx, k);
  } catch (const error&) {
    if (depth >= 24 || k == 0) throw;
    const long step = (k > 0) ? 1 : -1;
    const saddle neighbour = saddle_at(k - step, ctx, depth + 1);
    const complex seed = neighbour.s + 2.0 * pi * static_cast<double>(step);
    return saddle_refine(seed, ctx, k);
  }
}

/// All saddles for k in [k_min, k_max], ordered by k.
inline std::vector<saddle> saddle_catalog(long k_min, long k_max, const problem_context& ctx) {
  if (k_min > k_max) throw domain_error("saddle_catalog: k_min must not exceed k_max");
  std::vector<saddle> out;
  out.reserve(static_cast<std::size_t>(k_max - k_min + 1));
  for (long k = k_min; k <= k_max; ++k) {
    try {
      out.push_back(saddle_at(k, ctx));
    } catch (const error& e) {
      throw convergence_error("saddle_catalog: failed at k=" + std::to_string(k) + ": " + e.what(),
                              0.0, 0.0);
    }
  }
  return out;
}

}  // namespace lacunary

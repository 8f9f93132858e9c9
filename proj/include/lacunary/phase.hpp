#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "lacunary/context.hpp"
#include "lacunary/errors.hpp"

namespace lacunary {

// The phase of the integral representation,
//
//   psi(s) = s^2 / (4 n log x) - log(1 + x e^{is}),
//
// its derivatives to order 8, its logarithmic singularities T_k, and the
// per-saddle quantities lambda, a, omega.
//
// Derivatives come from an exact polynomial recurrence.  With
// u = x e^{is} and g = u/(1+u),
//
//   psi'(s)    = s/(2 n log x) - i g,
//   d/ds F(g)  = F'(g) * i (g - g^2),
//
// so defining B_1(g) = g - g^2 and B_{m+1} = B_m'(g) (g - g^2), the m-th
// s-derivative of g is i^m B_m(g) and
//
//   psi^{(r)}(s) = delta_{r,2}/(2 n log x) - i^r B_{r-1}(g)   (r >= 2).
//
// The B_m have integer coefficients c_{m,j} (j = 1..m+1) obeying
// c_{m+1,j} = j c_{m,j} - (j-1) c_{m,j-1}; they are generated once below.

namespace detail {

// c[m][j]: coefficient of g^j in B_m, m = 1..7, j = 1..m+1
inline constexpr auto logistic_polys = [] {
  std::array<std::array<long long, 9>, 8> c{};
  c[1][1] = 1;
  c[1][2] = -1;
  for (int m = 1; m < 7; ++m)
    for (int j = 1; j <= m + 2; ++j)
      c[m + 1][j] = j * c[m][j] - (j - 1) * c[m][j - 1];
  return c;
}();

inline complex logistic_poly(int m, complex g) {
  const auto& c = logistic_polys[m];
  complex r{static_cast<double>(c[m + 1]), 0.0};
  for (int j = m; j >= 1; --j) r = r * g + static_cast<double>(c[j]);
  return r * g;
}

inline constexpr complex ipow(int r) {
  switch (r & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

/// Index of the singularity T_k nearest to s (by real part).
inline long nearest_singularity_index(complex s, const problem_context& ctx) {
  return std::lround(((s.real() + ctx.logx.imag()) / pi - 1.0) / 2.0);
}

}  // namespace detail

/// Logarithmic singularity T_k = i log x + (2k+1) pi of the phase.
inline complex singularity(long k, const problem_context& ctx) {
  return iu * ctx.logx + static_cast<double>(2 * k + 1) * pi;
}

/// Principal-branch phase value.  Throws when 1 + x e^{is} vanishes to
/// within 1e-14 (evaluation on a singularity T_k).
inline complex psi(complex s, const problem_context& ctx) {
  const complex u = ctx.x * std::exp(iu * s);
  const complex w = 1.0 + u;
  if (std::abs(w) < 1e-14)
    throw singularity_error("psi: evaluation at logarithmic singularity T_k, k=" +
                                std::to_string(detail::nearest_singularity_index(s, ctx)),
                            detail::nearest_singularity_index(s, ctx));
  return s * s / (4.0 * static_cast<double>(ctx.n) * ctx.logx) - std::log(w);
}

/// r-th derivative of the phase, r in 1..8.
inline complex psi_derivative(complex s, int r, const problem_context& ctx) {
  if (r < 1 || r > 8) throw domain_error("psi_derivative: order must be in 1..8");
  const complex u = ctx.x * std::exp(iu * s);
  const complex w = 1.0 + u;
  if (std::abs(w) < 1e-14)
    throw singularity_error("psi_derivative: evaluation at logarithmic singularity",
                            detail::nearest_singularity_index(s, ctx));
  const complex g = u / w;
  if (r == 1) return s / (2.0 * static_cast<double>(ctx.n) * ctx.logx) - iu * g;
  complex v = -detail::ipow(r) * detail::logistic_poly(r - 1, g);
  if (r == 2) v += 1.0 / (2.0 * static_cast<double>(ctx.n) * ctx.logx);
  return v;
}

/// Everything at one point with a single exponential: psi and the
/// derivatives 1..8 (dpsi[0] is unused).
struct phase_value {
  complex s;
  complex psi;
  std::array<complex, 9> dpsi{};
};

inline phase_value phase_at(complex s, const problem_context& ctx) {
  const complex u = ctx.x * std::exp(iu * s);
  const complex w = 1.0 + u;
  if (std::abs(w) < 1e-14)
    throw singularity_error("phase_at: evaluation at logarithmic singularity",
                            detail::nearest_singularity_index(s, ctx));
  const complex g = u / w;
  const complex q = 1.0 / (2.0 * static_cast<double>(ctx.n) * ctx.logx);
  phase_value pv;
  pv.s = s;
  pv.psi = s * s * (0.5 * q) - std::log(w);
  pv.dpsi[1] = s * q - iu * g;
  for (int r = 2; r <= 8; ++r) {
    pv.dpsi[r] = -detail::ipow(r) * detail::logistic_poly(r - 1, g);
    if (r == 2) pv.dpsi[r] += q;
  }
  return pv;
}

/// Per-saddle quantities
///   lambda = x e^{i s_k},
///   a      = (1+lambda)^2 / (4 n lambda log x),
///   omega  = 2 n lambda log x / (1+lambda)^2,
/// so that 2 a omega = 1 identically.
struct saddle_quantities {
  complex lambda;
  complex a;
  complex omega;

  static saddle_quantities at(complex s_k, const problem_context& ctx) {
    saddle_quantities q;
    q.lambda = ctx.x * std::exp(iu * s_k);
    const complex w = 1.0 + q.lambda;
    if (std::abs(w) < 1e-14)
      throw degenerate_error("saddle_quantities: lambda = -1 (singularity collision)");
    const complex t = 2.0 * static_cast<double>(ctx.n) * q.lambda * ctx.logx;
    q.a = w * w / (2.0 * t);
    q.omega = t / (w * w);
    return q;
  }
};

}  // namespace lacunary

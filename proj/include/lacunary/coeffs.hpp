#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <string>

#include "lacunary/context.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/phase.hpp"
#include "lacunary/saddles.hpp"

namespace lacunary {

// Expansion-coefficient algebra.  Two independent routes produce the
// correction coefficients of the per-saddle series:
//
//  * the generic steepest-descent formulas in the derivative ratios
//    p_r = psi^{(r)} / psi'' (d_coefficients_generic), and
//
//  * closed forms Q_j(a, lambda) built from fixed integer polynomials
//    P_{jk}(lambda) (poly_P / q_values / c_coefficients).
//
// cross_check() compares the two and is the principal validation of the
// closed-form tables.

namespace detail {

// P_{jk} coefficient lists, constant term first.  Every list is
// palindromic: xi^{2j} P(1/xi) = P(xi).
inline constexpr std::array<long long, 3> P11 = {1, 1, 1};
inline constexpr std::array<long long, 3> P12 = {1, -4, 1};
inline constexpr std::array<long long, 5> P21 = {1, 2, 3, 2, 1};  // (1+x+x^2)^2
inline constexpr std::array<long long, 5> P22 = {13, 5, -10, 5, 13};
inline constexpr std::array<long long, 5> P23 = {67, -328, 278, -328, 67};
inline constexpr std::array<long long, 5> P24 = {1, -26, 66, -26, 1};
inline constexpr std::array<long long, 7> P31 = {139, 417, 402, 109, 402, 417, 139};
inline constexpr std::array<long long, 7> P32 = {151, 378, 308, 56, 308, 378, 151};
inline constexpr std::array<long long, 7> P33 = {9271, -3497, -10867, 766, -10867, -3497, 9271};
inline constexpr std::array<long long, 7> P34 = {7349, -48668, 45007, -24056, 45007, -48668, 7349};
inline constexpr std::array<long long, 7> P35 = {203, -5016, 18729, -24392, 18729, -5016, 203};
inline constexpr std::array<long long, 7> P36 = {1, -120, 1191, -2416, 1191, -120, 1};

template <std::size_t N>
complex horner(const std::array<long long, N>& c, complex xi) {
  complex r{static_cast<double>(c[N - 1]), 0.0};
  for (std::size_t i = N - 1; i-- > 0;) r = r * xi + static_cast<double>(c[i]);
  return r;
}

}  // namespace detail

/// Evaluate P_{j,index}(xi) with its exact integer coefficients.
inline complex poly_P(int j, int index, complex xi) {
  using namespace detail;
  if (j == 1) {
    if (index == 1) return horner(P11, xi);
    if (index == 2) return horner(P12, xi);
  } else if (j == 2) {
    if (index == 1) return horner(P21, xi);
    if (index == 2) return horner(P22, xi);
    if (index == 3) return horner(P23, xi);
    if (index == 4) return horner(P24, xi);
  } else if (j == 3) {
    if (index >= 1 && index <= 6) {
      switch (index) {
        case 1: return horner(P31, xi);
        case 2: return horner(P32, xi);
        case 3: return horner(P33, xi);
        case 4: return horner(P34, xi);
        case 5: return horner(P35, xi);
        case 6: return horner(P36, xi);
      }
    }
  }
  throw domain_error("poly_P: invalid (j, index) pair (" + std::to_string(j) + ", " +
                     std::to_string(index) + ")");
}

/// The combinations Q_1, Q_2, Q_3 of the P polynomials.
inline std::array<complex, 3> q_values(complex a, complex lambda) {
  using namespace detail;
  const complex a2 = a * a, a3 = a2 * a, a4 = a2 * a2, a5 = a4 * a;
  const complex q1 = horner(P11, lambda) - 3.0 * a * horner(P12, lambda);
  const complex q2 = horner(P21, lambda) - 6.0 * a * horner(P22, lambda) +
                     3.0 * a2 * horner(P23, lambda) - 48.0 * a3 * horner(P24, lambda);
  const complex q3 = horner(P31, lambda) + 27.0 * a * horner(P32, lambda) -
                     9.0 * a2 * horner(P33, lambda) + 27.0 * a3 * horner(P34, lambda) -
                     432.0 * a4 * horner(P35, lambda) + 4320.0 * a5 * horner(P36, lambda);
  return {q1, q2, q3};
}

/// Normalized series coefficients at one saddle (the closed-form route):
///   chi = log n / (n lambda),
///   c_1 = -Q_1 chi / (6 (1+2a)^3),
///   c_2 =  Q_2 chi^2 / (216 (1+2a)^6),
///   c_3 =  Q_3 chi^3 / (97200 (1+2a)^9),
/// with the unnormalized d_j = c_j (n / log n)^j alongside.
struct coefficient_set {
  std::array<complex, 4> d{};
  std::array<complex, 4> c{};
  complex chi;
  complex a;
  complex lambda;
};

inline coefficient_set c_coefficients(const saddle_quantities& q, const problem_context& ctx) {
  const complex b = 1.0 + 2.0 * q.a;
  if (std::abs(b) < 1e-14)
    throw degenerate_error("c_coefficients: 1 + 2a vanished (degenerate saddle)");
  if (std::abs(q.lambda) == 0.0)
    throw degenerate_error("c_coefficients: lambda = 0");

  const double logn = std::log(static_cast<double>(ctx.n));
  const complex chi = logn / (static_cast<double>(ctx.n) * q.lambda);
  const auto Q = q_values(q.a, q.lambda);
  const complex b3 = b * b * b;
  const complex b6 = b3 * b3;
  const complex b9 = b6 * b3;

  coefficient_set cs;
  cs.chi = chi;
  cs.a = q.a;
  cs.lambda = q.lambda;
  cs.c[0] = 1.0;
  cs.c[1] = -Q[0] * chi / (6.0 * b3);
  cs.c[2] = Q[1] * chi * chi / (216.0 * b6);
  cs.c[3] = Q[2] * chi * chi * chi / (97200.0 * b9);
  cs.d[0] = 1.0;
  const complex lam_chi = q.lambda * chi;  // = log n / n
  cs.d[1] = cs.c[1] / lam_chi;
  cs.d[2] = cs.c[2] / (lam_chi * lam_chi);
  cs.d[3] = cs.c[3] / (lam_chi * lam_chi * lam_chi);
  return cs;
}

/// Generic steepest-descent coefficients from the derivative ratios
/// p_r = psi^{(r)}/psi''.  `dpsi` holds psi'' .. psi^{(8)} in order.
inline std::array<complex, 4> d_coefficients_generic(std::span<const complex, 7> dpsi) {
  const complex dd = dpsi[0];
  if (std::abs(dd) < 1e-300) throw degenerate_error("d_coefficients_generic: psi'' = 0");
  const complex p3 = dpsi[1] / dd, p4 = dpsi[2] / dd, p5 = dpsi[3] / dd;
  const complex p6 = dpsi[4] / dd, p7 = dpsi[5] / dd, p8 = dpsi[6] / dd;

  const complex p3_2 = p3 * p3, p3_3 = p3_2 * p3, p3_4 = p3_2 * p3_2, p3_6 = p3_4 * p3_2;
  const complex p4_2 = p4 * p4, p4_3 = p4_2 * p4, p5_2 = p5 * p5;

  std::array<complex, 4> d{};
  d[0] = 1.0;
  d[1] = (5.0 * p3_2 - 3.0 * p4) / (12.0 * dd);
  d[2] = (385.0 * p3_4 - 630.0 * p3_2 * p4 + 168.0 * p3 * p5 + 105.0 * p4_2 - 24.0 * p6) /
         (864.0 * dd * dd);
  d[3] = (425425.0 * p3_6 - 1126125.0 * p3_4 * p4 + 675675.0 * p3_2 * p4_2 - 51975.0 * p4_3 +
          360360.0 * p3_3 * p5 - 249480.0 * p3 * p4 * p5 + 13608.0 * p5_2 - 83160.0 * p3_2 * p6 +
          22680.0 * p4 * p6 + 12960.0 * p3 * p7 - 1080.0 * p8) /
         (777600.0 * dd * dd * dd);
  return d;
}

/// Maximum relative discrepancy between the generic-p_r route and the
/// closed-form Q route for d_1..d_3 at a refined saddle.
inline double cross_check(const saddle& sad, const problem_context& ctx) {
  const phase_value pv = phase_at(sad.s, ctx);
  const std::array<complex, 7> derivs = {pv.dpsi[2], pv.dpsi[3], pv.dpsi[4], pv.dpsi[5],
                                         pv.dpsi[6], pv.dpsi[7], pv.dpsi[8]};
  const auto d_gen = d_coefficients_generic(std::span<const complex, 7>{derivs});
  const auto d_q = c_coefficients(sad.q, ctx).d;
  double worst = 0.0;
  for (int j = 1; j <= 3; ++j) {
    const double scale = std::max(std::abs(d_q[j]), 1e-300);
    worst = std::max(worst, std::abs(d_gen[j] - d_q[j]) / scale);
  }
  return worst;
}

}  // namespace lacunary

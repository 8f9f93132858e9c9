#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "lacunary/errors.hpp"

namespace lacunary {

using complex = std::complex<double>;

inline constexpr complex iu{0.0, 1.0};
inline constexpr double pi = std::numbers::pi;

/// Parameter bundle for one evaluation problem: degree n and the
/// substitution z = x^{-2} with |x| > 1 and |arg x| <= pi/2, plus the
/// derived constants that every module needs.
struct problem_context {
  long n = 0;
  complex x;      // |x| > 1
  complex logx;   // principal branch
  complex alpha;  // 2 x log x
  complex z;      // x^{-2}
  complex y;      // x^2

  problem_context(long n_, complex x_) : n(n_), x(x_) {
    if (n < 1) throw domain_error("problem_context: n must be a positive integer");
    if (!(std::abs(x) > 1.0))
      throw domain_error("problem_context: |x| must be strictly greater than 1");
    if (std::abs(std::arg(x)) > pi / 2 + 1e-12)
      throw domain_error("problem_context: |arg x| must not exceed pi/2");
    logx = std::log(x);
    alpha = 2.0 * x * logx;
    y = x * x;
    z = 1.0 / y;
  }

  /// Build from (n, z) with |z| < 1; x is the principal branch of z^{-1/2},
  /// which lands in |arg x| <= pi/2 automatically.
  static problem_context from_z(long n_, complex z_) {
    if (!(std::abs(z_) < 1.0))
      throw domain_error("problem_context: |z| must be strictly less than 1");
    return problem_context(n_, std::exp(-0.5 * std::log(z_)));
  }

  bool real_x() const { return x.imag() == 0.0 && x.real() > 0.0; }

  /// arg x, the phase called theta in the Stokes analysis.
  double theta() const { return std::arg(x); }
};

}  // namespace lacunary

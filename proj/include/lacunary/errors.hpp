#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lacunary {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct domain_error : error {
  using error::error;
};

/// A term (or intermediate factor) left the representable range of binary64.
struct range_error : error {
  long term_k;
  range_error(const std::string& msg, long k) : error(msg), term_k(k) {}
};

/// Evaluation requested at (or numerically on top of) a logarithmic
/// singularity of the phase; carries the index of the nearest T_k.
struct singularity_error : error {
  long nearest_k;
  singularity_error(const std::string& msg, long k) : error(msg), nearest_k(k) {}
};

/// Saddle degenerate for the requested operation (psi'' = 0, lambda = -1,
/// 1 + 2a = 0 or 1 + omega = 0).
struct degenerate_error : error {
  using error::error;
};

struct convergence_error : error {
  std::complex<double> last;
  double residual;
  convergence_error(const std::string& msg, std::complex<double> s, double r)
      : error(msg), last(s), residual(r) {}
};

/// Newton iteration left the basin of the intended saddle.
struct basin_escape_error : error {
  std::complex<double> found;
  long expected_k;
  basin_escape_error(const std::string& msg, std::complex<double> s, long k)
      : error(msg), found(s), expected_k(k) {}
};

/// Adaptive quadrature could not meet the requested tolerance.
struct quadrature_error : error {
  double achieved;
  quadrature_error(const std::string& msg, double err) : error(msg), achieved(err) {}
};

/// A Stokes chart does not extend far enough down in theta for the query.
struct insufficient_chart_error : error {
  int needed_pair;
  insufficient_chart_error(const std::string& msg, int pair)
      : error(msg), needed_pair(pair) {}
};

}  // namespace lacunary

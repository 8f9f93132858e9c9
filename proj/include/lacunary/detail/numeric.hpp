#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace lacunary::detail {

using complex = std::complex<double>;

/// w^e for integer e >= 0 by binary powering (one rounding per squaring,
/// so ~log2(e) roundings instead of the exp(e log w) route).
inline complex pow_int(complex w, long long e) {
  complex r{1.0, 0.0};
  complex b = w;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

/// Neumaier compensated accumulator.
struct neumaier {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct neumaier_complex {
  neumaier re, im;
  void add(complex v) {
    re.add(v.real());
    im.add(v.imag());
  }
  complex value() const { return {re.value(), im.value()}; }
};

// ---- minimal double-double (two non-overlapping doubles, hi + lo) ----

struct dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline dd dd_add(dd a, double b) {
  dd s = two_sum(a.hi, b);
  s.lo += a.lo;
  dd r = two_sum(s.hi, s.lo);
  return r;
}

struct dd_complex_sum {
  dd re, im;
  void add(complex v) {
    re = dd_add(re, v.real());
    im = dd_add(im, v.imag());
  }
  complex value() const { return {re.hi + re.lo, im.hi + im.lo}; }
};

}  // namespace lacunary::detail

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <vector>

namespace lacunary::detail {

// Gauss 7 / Kronrod 15 on [-1, 1].  Column 0: abscissa, 1: Gauss weight
// (zero for Kronrod-only nodes), 2: Kronrod weight.
inline constexpr double gk15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

template <class F>
std::complex<double> gk15_panel(F&& f, double a, double b, double& err, double& absint) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::complex<double> f0 = f(c);
  std::complex<double> g = gk15[0][1] * f0;
  std::complex<double> k = gk15[0][2] * f0;
  absint = gk15[0][2] * std::abs(f0);
  for (int i = 1; i < 8; ++i) {
    const double dx = h * gk15[i][0];
    std::complex<double> fp = f(c + dx);
    std::complex<double> fm = f(c - dx);
    g += gk15[i][1] * (fp + fm);
    k += gk15[i][2] * (fp + fm);
    absint += gk15[i][2] * (std::abs(fp) + std::abs(fm));
  }
  g *= h;
  k *= h;
  absint *= std::abs(h);
  err = std::abs(k - g);
  return k;
}

struct quad_result {
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;
  std::size_t panels = 0;
};

/// Globally adaptive Gauss-Kronrod integration of a complex-valued f over
/// [a, b].  The interval is pre-split into `initial_panels` pieces (callers
/// choose this from the oscillation scale of their integrand), then the
/// worst panel is bisected until the summed error estimate meets
/// max(abs_tol, rel_tol * |integral|) or the panel budget runs out.
template <class F>
quad_result integrate_adaptive(F&& f, double a, double b, double rel_tol, double abs_tol,
                               int initial_panels, std::size_t max_panels = 40000) {
  struct panel {
    double a, b, err, absint;
    std::complex<double> val;
    bool operator<(const panel& o) const { return err < o.err; }
  };

  std::priority_queue<panel> heap;
  std::complex<double> total{0.0, 0.0};
  double total_err = 0.0;

  initial_panels = std::max(initial_panels, 1);
  const double w = (b - a) / initial_panels;
  for (int i = 0; i < initial_panels; ++i) {
    panel p;
    p.a = a + i * w;
    p.b = (i + 1 == initial_panels) ? b : a + (i + 1) * w;
    p.val = gk15_panel(f, p.a, p.b, p.err, p.absint);
    total += p.val;
    total_err += p.err;
    heap.push(p);
  }

  std::size_t n_panels = static_cast<std::size_t>(initial_panels);
  auto tol = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };

  while (total_err > tol() && n_panels < max_panels) {
    panel worst = heap.top();
    heap.pop();
    if (worst.err <= 0.0 || worst.b - worst.a < 1e-15 * std::abs(b - a)) {
      // cannot usefully split further; put it back and stop
      heap.push(worst);
      break;
    }
    total -= worst.val;
    total_err -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);
    panel left, right;
    left.a = worst.a;
    left.b = mid;
    right.a = mid;
    right.b = worst.b;
    left.val = gk15_panel(f, left.a, left.b, left.err, left.absint);
    right.val = gk15_panel(f, right.a, right.b, right.err, right.absint);
    total += left.val + right.val;
    total_err += left.err + right.err;
    heap.push(left);
    heap.push(right);
    ++n_panels;
  }

  return {total, total_err, n_panels};
}

}  // namespace lacunary::detail

#include <cstdio>
#include "lacunary/lacunary.hpp"

using namespace lacunary;

int main() {
  // contour termination after fix
  problem_context c200(200, 2.0);
  {
    saddle s0 = saddle_at(0, c200);
    auto [a, b] = trace_descent(s0, c200);
    printf("C0 termini: (%d, T%ld) (%d, T%ld)\n", (int)a.terminus.what, a.terminus.index,
           (int)b.terminus.what, b.terminus.index);
    saddle s1 = saddle_at(1, c200);
    auto [c, d] = trace_descent(s1, c200);
    printf("C1 termini: (%d, T%ld) (%d, T%ld)\n", (int)c.terminus.what, c.terminus.index,
           (int)d.terminus.what, d.terminus.index);
  }
  // escape direction for complex x beyond the Stokes angle
  {
    problem_context cc(100, std::polar(3.0, 0.30 * pi));
    saddle s1 = saddle_at(1, cc);
    auto [a, b] = trace_descent(s1, cc);
    printf("complex C1 termini: (%d idx %ld ang %.4f) (%d idx %ld ang %.4f); expect angle near %.4f\n",
           (int)a.terminus.what, a.terminus.index, a.terminus.angle, (int)b.terminus.what,
           b.terminus.index, b.terminus.angle, 0.30 * pi / (2.0 * std::log(3.0)));
  }

  // table 5 grid
  const long ns[3] = {200, 200, 1000};
  const double xs[3] = {1.20, 1.50, 2.00};
  const double refs[3][6] = {
      {5.919e-9, 3.391e-7, 4.315e-7, 3.856e-7, 2.808e-7, 5.379e-8},
      {5.329e-7, 1.303e-6, 3.413e-6, 1.077e-5, 7.425e-6, 4.089e-6},
      {2.206e-6, 3.564e-6, 3.216e-6, 6.450e-6, 1.029e-5, 2.245e-6},
  };
  for (int col = 0; col < 3; ++col) {
    for (int row = 0; row < 6; ++row) {
      const double theta = 0.1 * row * pi;
      problem_context ctx(ns[col], std::polar(xs[col], theta));
      complex exact = eval_direct(ns[col], ctx.z).value;
      auto e = expand_complex(ctx, 3);
      double err = std::abs(e.total - exact) / std::abs(exact);
      printf("n=%ld |x|=%.2f th=%.1fpi: err %.3e (ref %.3e, ratio %.2f)  kmin=%ld kmax=%ld\n",
             ns[col], xs[col], 0.1 * row, err, refs[col][row], err / refs[col][row], e.k_min_used,
             e.k_max_used);
    }
  }
  return 0;
}

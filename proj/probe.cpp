#include <cstdio>
#include "lacunary/lacunary.hpp"

using namespace lacunary;

int main() {
  // direct evaluation vs reference exact values
  printf("wp_2(0.5)        = %.12g\n", eval_direct(2, 0.5).value.real());
  printf("wp_10(1)         = %.12g\n", eval_direct(10, 1.0).value.real());
  printf("wp_200(1.2^-2)   = %.10e  (ref 8.562122063e9)\n",
         eval_direct(200, 1.0 / 1.44).value.real());
  printf("wp_200(1/4)      = %.10e  (ref 4.398555252e4)\n",
         eval_direct(200, 0.25).value.real());
  printf("wp_400(1.1^-2)   = %.10e  (ref 9.488964463e18)\n",
         eval_direct(400, 1.0 / 1.21).value.real());
  printf("wp_1000(1/4)     = %.10e  (ref 2.202064917e7)\n",
         eval_direct(1000, 0.25).value.real());

  // quadrature route
  problem_context c200(200, 2.0);
  printf("quad wp_200(1/4) = %.10e\n", eval_quadrature(c200).real());

  // saddles, n=1000 x=2
  problem_context c1k(1000, 2.0);
  for (long k = 0; k <= 5; ++k) {
    complex g = saddle_guess(k, c1k);
    saddle s = saddle_at(k, c1k);
    printf("k=%ld  s=(%.6f,%.6f)  guess=(%.6f,%.6f)  res=%.2e\n", k, s.s.real(), s.s.imag(),
           g.real(), g.imag(), s.residual);
  }

  // expansion vs table
  auto e200 = expand_real(problem_context(200, 1.2), 3, 1);
  printf("expand(200,1.2)  = %.10e  (ref 8.562122013e9)\n", e200.total.real());
  auto e200b = expand_real(problem_context(200, 2.0), 3, 1);
  printf("expand(200,2)    = %.10e  (ref 4.398536817e4)\n", e200b.total.real());
  auto e400 = expand_real(problem_context(400, 1.1), 3, 1);
  printf("expand(400,1.1)  = %.10e  (ref 9.488964461e18)\n", e400.total.real());
  auto e1k = expand_real(problem_context(1000, 2.0), 3, 1);
  printf("expand(1000,2)   = %.10e  (ref 2.202060088e7)\n", e1k.total.real());

  // gn + conjecture
  printf("gn(200,1.44)     = %.10e  (ref 7.864432769e9)\n", gn_approx(200, 1.44));
  printf("gn(200,4)        = %.10e  (ref 4.712945605e4)\n", gn_approx(200, 4.0));
  printf("gn(400,1.21)     = %.10e  (ref 7.418083490e18)\n", gn_approx(400, 1.21));
  printf("gn(1000,4)       = %.10e  (ref 2.370080869e7)\n", gn_approx(1000, 4.0));
  printf("W(1)             = %.16f (ref 0.5671432904097838)\n", lambert_w(1.0));
  printf("r(1000,4)        = %.10f (Im s0 = 6.112742)\n", r_of_n(1000, 4.0));

  // table 2 error column (200, 1.10)
  double exact = eval_direct(200, 1.0 / 1.21).value.real();
  for (int j = 0; j <= 3; ++j) {
    auto e = expand_real(problem_context(200, 1.10), j, 1);
    printf("table2 j=%d err  = %.4e\n", j, std::abs(e.total.real() - exact) / exact);
  }

  // cross-check at a couple of saddles
  saddle s0 = saddle_at(0, c1k);
  printf("cross_check s0   = %.3e\n", cross_check(s0, c1k));
  saddle s2 = saddle_at(2, c200);
  printf("cross_check s2   = %.3e\n", cross_check(s2, c200));
  problem_context ccx(100, std::polar(3.0, 0.18 * pi));
  saddle s1c = saddle_at(1, ccx);
  printf("cross_check s1cx = %.3e\n", cross_check(s1c, ccx));

  return 0;
}

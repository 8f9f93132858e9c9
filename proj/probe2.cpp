#include <cstdio>
#include "lacunary/lacunary.hpp"

using namespace lacunary;

static double assemble(long n, double x, int j0, int j1) {
  problem_context ctx(n, x);
  saddle s0 = saddle_at(0, ctx);
  saddle s1 = saddle_at(1, ctx);
  auto J0 = contribution(s0, c_coefficients(s0.q, ctx), j0, ctx);
  auto J1 = contribution(s1, c_coefficients(s1.q, ctx), j1, ctx);
  return J0.value.real() + 2.0 * J1.value.real();
}

int main() {
  printf("(200,2)  ref 4.398536817e4\n");
  for (int j1 = 0; j1 <= 3; ++j1)
    printf("  j1=%d: %.10e   rel dev vs ref = %.3e\n", j1, assemble(200, 2.0, 3, j1),
           std::abs(assemble(200, 2.0, 3, j1) - 4.398536817e4) / 4.398536817e4);
  printf("(1000,2) ref 2.202060088e7\n");
  for (int j1 = 0; j1 <= 3; ++j1)
    printf("  j1=%d: %.10e   rel dev vs ref = %.3e\n", j1, assemble(1000, 2.0, 3, j1),
           std::abs(assemble(1000, 2.0, 3, j1) - 2.202060088e7) / 2.202060088e7);
  return 0;
}

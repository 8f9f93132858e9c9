#pragma once

// Umbrella header: evaluation of the lacunary binomial-type polynomials
//   wp_n(z) = sum_{k=0}^{n} C(n,k) z^{k(k-1)/2}
// exactly and through their saddle-point expansions, with Stokes analysis
// for complex argument and steepest-descent contour tracing.

#include "lacunary/context.hpp"
#include "lacunary/contour.hpp"
#include "lacunary/coeffs.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/exact.hpp"
#include "lacunary/expansion.hpp"
#include "lacunary/phase.hpp"
#include "lacunary/saddles.hpp"
#include "lacunary/stokes.hpp"

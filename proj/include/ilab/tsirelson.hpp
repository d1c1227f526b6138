#pragma once

#include "ilab/vector.hpp"

namespace ilab {

// Norm of the implicitly defined space T:
//   nu(x) = max( ||x||_inf , 1/2 sup { sum_j nu(E_j x) } )
// where the sup runs over families of n successive finite sets with
// n <= min E_1.  Enlarging the sets of an admissible family to intervals
// keeps admissibility (min E_1 is unchanged) and cannot decrease the sum,
// so the search is over interval families only.  The family consisting of
// the single full interval never binds (it contributes nu/2), so the
// recursion is well-founded over interval length and one bottom-up pass
// over intervals computes the exact fixed point.
//
// When min supp(x) >= max supp(x) - min supp(x) + 1 (1-based indices),
// every partition of every subinterval is admissible and the fixed point
// collapses to max(||x||_inf, ||x||_1 / 2); that closed form is used
// directly.
//
// tol is the slack for the fixed-point residual re-check; must be > 0.
double tsirelson_norm(const Vector& x, double tol = 1e-9);

// 2-convexification: ||x|| = tsirelson_norm(|x|^2)^(1/2)
double tsirelson2_norm(const Vector& x, double tol = 1e-9);

}  // namespace ilab

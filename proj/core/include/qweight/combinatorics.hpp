#pragma once

#include "qweight/rational.hpp"

namespace qweight {

// Binomial coefficient C(n, k). Returns 0 outside the Pascal triangle
// (k < 0, n < 0 or k > n), so sums over shifted indices need no guards.
Int binomial(long n, long k);

// Krawtchouk polynomial value for the quartary-style weight transform,
//
//     K_m(l; n) = sum_{b=0}^{m} (-1)^b C(n-l, m-b) C(l, b),
//
// the coefficient of z^m in (1+z)^(n-l) (1-z)^l. Requires 0 <= m, l <= n.
Int krawtchouk(int m, int l, int n);

}  // namespace qweight

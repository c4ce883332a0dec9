#include "qweight/combinatorics.hpp"

#include <stdexcept>

namespace qweight {

Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Int krawtchouk(int m, int l, int n) {
  if (n < 0 || m < 0 || m > n || l < 0 || l > n)
    throw std::domain_error("krawtchouk: need 0 <= m, l <= n");
  Int acc(0);
  for (int b = 0; b <= m; ++b) {
    Int term = binomial(n - l, m - b) * binomial(l, b);
    if (b & 1)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

}  // namespace qweight

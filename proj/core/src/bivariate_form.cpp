#include "qweight/bivariate_form.hpp"

#include <stdexcept>

#include "qweight/combinatorics.hpp"

namespace qweight {

BivariateForm::BivariateForm(int deg, std::vector<Rat> c) : degree(deg), coeffs(std::move(c)) {
  if (degree < 0) throw std::domain_error("bivariate form: negative degree");
  if (coeffs.size() != static_cast<std::size_t>(degree) + 1)
    throw std::domain_error("bivariate form: coefficient count must be degree + 1");
}

BivariateForm substitute(const BivariateForm& form, const Rat& a, const Rat& b, const Rat& c,
                         const Rat& e) {
  const int n = form.degree;
  std::vector<Rat> out(static_cast<std::size_t>(n) + 1, Rat(0));

  // Expand coeffs[j] (a x + b y)^(n-j) (c x + e y)^j term by term. Powers of
  // the four scalars are cached up front; each (r, s) pair lands on y^(r+s).
  std::vector<Rat> pa(n + 1), pb(n + 1), pc(n + 1), pe(n + 1);
  pa[0] = pb[0] = pc[0] = pe[0] = Rat(1);
  for (int i = 1; i <= n; ++i) {
    pa[i] = pa[i - 1] * a;
    pb[i] = pb[i - 1] * b;
    pc[i] = pc[i - 1] * c;
    pe[i] = pe[i - 1] * e;
  }

  for (int j = 0; j <= n; ++j) {
    if (form.coeffs[j] == 0) continue;
    for (int r = 0; r <= n - j; ++r) {
      const Rat left = Rat(binomial(n - j, r)) * pa[n - j - r] * pb[r];
      if (left == 0) continue;
      for (int s = 0; s <= j; ++s) {
        const Rat right = Rat(binomial(j, s)) * pc[j - s] * pe[s];
        if (right == 0) continue;
        out[r + s] += form.coeffs[j] * left * right;
      }
    }
  }
  return BivariateForm(n, std::move(out));
}

bool operator==(const BivariateForm& lhs, const BivariateForm& rhs) {
  return lhs.degree == rhs.degree && lhs.coeffs == rhs.coeffs;
}

}  // namespace qweight

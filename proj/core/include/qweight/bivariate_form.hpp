#pragma once

#include <vector>

#include "qweight/rational.hpp"

namespace qweight {

// Homogeneous bivariate form of fixed degree n,
//
//     F(x, y) = sum_j coeffs[j] x^(n-j) y^j,
//
// the shape every weight enumerator takes when written as a polynomial.
struct BivariateForm {
  int degree = 0;
  std::vector<Rat> coeffs;  // size degree + 1

  BivariateForm() = default;
  BivariateForm(int deg, std::vector<Rat> c);
};

// Exact linear substitution x -> a x + b y, y -> c x + e y. Homogeneity is
// preserved, so the result has the same degree.
BivariateForm substitute(const BivariateForm& form, const Rat& a, const Rat& b, const Rat& c,
                         const Rat& e);

bool operator==(const BivariateForm& lhs, const BivariateForm& rhs);

}  // namespace qweight

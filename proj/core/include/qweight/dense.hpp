#pragma once

#include <complex>
#include <vector>

#include "qweight/oracle.hpp"
#include "qweight/stabilizer.hpp"

namespace qweight {

using Cplx = std::complex<double>;

// Row-major square complex matrix, sized p^n for n sites.
struct DenseMatrix {
  long dim = 0;
  std::vector<Cplx> a;

  explicit DenseMatrix(long d = 0) : dim(d), a(static_cast<std::size_t>(d) * d) {}
  Cplx& at(long r, long c) { return a[static_cast<std::size_t>(r) * dim + c]; }
  const Cplx& at(long r, long c) const { return a[static_cast<std::size_t>(r) * dim + c]; }
};

// Code projector as the product of the generator averages (sum_b g^b) / p.
// Materialization budget: p^n <= 128.
DenseMatrix dense_projector(const StabilizerCode& code);

// Extracts `rank` orthonormal columns spanning the range of a projector.
// Throws inconsistency_error when the numerical rank disagrees.
std::vector<std::vector<Cplx>> projector_basis(const DenseMatrix& pi, long rank);

// Exact sl weight pair of the projector onto the span of the given
// orthonormal states, evaluated in floating point by the basis traces
//   A_j = sum |tr(E' Pi)|^2,  B_j = sum tr(E' Pi E Pi)  (E' conjugate),
// then rounded to rationals with denominator p^n. Residuals above 1e-9,
// non-real B values, or non-orthonormal inputs raise inconsistency_error.
WeightPair dense_weights(const std::vector<std::vector<Cplx>>& states, int p, int n);

}  // namespace qweight

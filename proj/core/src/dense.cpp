#include "qweight/dense.hpp"

#include <cmath>
#include <numbers>

#include "qweight/errors.hpp"

namespace qweight {

namespace {

constexpr long kDenseBudget = 128;
constexpr double kResidual = 1e-9;

long checked_dim(int p, int n) {
  long dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= p;
    if (dim > kDenseBudget) throw budget_error("dense matrices limited to dimension 128");
  }
  return dim;
}

// Base-p digit table: digs[j][site].
std::vector<std::vector<int>> digit_table(long dim, int p, int n) {
  std::vector<std::vector<int>> digs(dim, std::vector<int>(n));
  for (long j = 0; j < dim; ++j) {
    long v = j;
    for (int s = 0; s < n; ++s) {
      digs[j][s] = static_cast<int>(v % p);
      v /= p;
    }
  }
  return digs;
}

// X^x acts on computational indices by digitwise shift.
std::vector<long> shift_table(const std::vector<std::vector<int>>& digs, const std::vector<int>& x,
                              int p) {
  const long dim = static_cast<long>(digs.size());
  const int n = static_cast<int>(x.size());
  std::vector<long> out(dim);
  for (long j = 0; j < dim; ++j) {
    long idx = 0, base = 1;
    for (int s = 0; s < n; ++s) {
      idx += base * ((digs[j][s] + x[s]) % p);
      base *= p;
    }
    out[j] = idx;
  }
  return out;
}

Cplx root_of_unity(int num, int den) {  // exp(i pi num / den)
  const double t = std::numbers::pi * num / den;
  return {std::cos(t), std::sin(t)};
}

}  // namespace

DenseMatrix dense_projector(const StabilizerCode& code) {
  const int p = code.p, n = code.n;
  const long dim = checked_dim(p, n);
  const auto digs = digit_table(dim, p, n);

  DenseMatrix pi(dim);
  for (long j = 0; j < dim; ++j) pi.at(j, j) = 1.0;

  for (const auto& g : code.stabilizers) {
    // monomial matrix of g: g|j> = tau^phase w^(z.j) |j + x>
    std::vector<int> x(g.x.begin(), g.x.end());
    const auto shift = shift_table(digs, x, p);
    std::vector<Cplx> phase(dim);
    for (long j = 0; j < dim; ++j) {
      long zj = 0;
      for (int s = 0; s < n; ++s) zj += long(g.z[s]) * digs[j][s];
      phase[j] = root_of_unity(static_cast<int>((g.phase + 2 * (zj % p)) % (2 * p)), p);
    }
    // avg = (sum_b g^b) / p via repeated monomial application
    DenseMatrix avg(dim), power(dim);
    for (long j = 0; j < dim; ++j) power.at(j, j) = 1.0;
    for (int b = 0; b < p; ++b) {
      for (std::size_t i = 0; i < avg.a.size(); ++i) avg.a[i] += power.a[i];
      if (b + 1 == p) break;
      DenseMatrix next(dim);
      for (long j = 0; j < dim; ++j)  // next = g * power
        for (long c = 0; c < dim; ++c) next.at(shift[j], c) += phase[j] * power.at(j, c);
      power = std::move(next);
    }
    DenseMatrix out(dim);
    for (long r = 0; r < dim; ++r)
      for (long m = 0; m < dim; ++m) {
        const Cplx f = avg.at(r, m) / double(p);
        if (f == 0.0) continue;
        for (long c = 0; c < dim; ++c) out.at(r, c) += f * pi.at(m, c);
      }
    pi = std::move(out);
  }
  return pi;
}

std::vector<std::vector<Cplx>> projector_basis(const DenseMatrix& pi, long rank) {
  const long dim = pi.dim;
  std::vector<std::vector<Cplx>> basis;
  for (long c = 0; c < dim && static_cast<long>(basis.size()) < rank; ++c) {
    std::vector<Cplx> v(dim);
    for (long r = 0; r < dim; ++r) v[r] = pi.at(r, c);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        Cplx ov = 0;
        for (long r = 0; r < dim; ++r) ov += std::conj(b[r]) * v[r];
        for (long r = 0; r < dim; ++r) v[r] -= ov * b[r];
      }
    }
    double norm2 = 0;
    for (long r = 0; r < dim; ++r) norm2 += std::norm(v[r]);
    if (norm2 < 1e-6) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    for (long r = 0; r < dim; ++r) v[r] *= inv;
    basis.push_back(std::move(v));
  }
  if (static_cast<long>(basis.size()) != rank)
    throw inconsistency_error("projector rank disagrees with the requested basis size");
  return basis;
}

WeightPair dense_weights(const std::vector<std::vector<Cplx>>& states, int p, int n) {
  const long dim = checked_dim(p, n);
  const long rank = static_cast<long>(states.size());
  if (rank < 1) throw std::domain_error("need at least one state");
  for (const auto& v : states)
    if (static_cast<long>(v.size()) != dim) throw std::domain_error("state length mismatch");
  for (long i = 0; i < rank; ++i)
    for (long j = i; j < rank; ++j) {
      Cplx ov = 0;
      for (long r = 0; r < dim; ++r) ov += std::conj(states[i][r]) * states[j][r];
      if (std::abs(ov - (i == j ? 1.0 : 0.0)) > kResidual)
        throw inconsistency_error("states are not orthonormal");
    }

  DenseMatrix pi(dim);
  for (const auto& v : states)
    for (long r = 0; r < dim; ++r)
      for (long c = 0; c < dim; ++c) pi.at(r, c) += v[r] * std::conj(v[c]);

  const auto digs = digit_table(dim, p, n);
  std::vector<Cplx> omega(p);
  for (int e = 0; e < p; ++e) omega[e] = root_of_unity(2 * e, p);

  std::vector<double> wa(n + 1, 0.0), wb(n + 1, 0.0), wb_imag(n + 1, 0.0);
  std::vector<int> x(n), z(n);
  std::vector<int> zdot(dim);
  auto advance = [&](std::vector<int>& digits) {
    for (int t = 0; t < n; ++t) {
      if (++digits[t] < p) return;
      digits[t] = 0;
    }
  };
  // loop all p^(2n) error patterns, z outer so zdot amortizes over x
  for (long zi = 0; zi < dim; ++zi, advance(z)) {
    for (long j = 0; j < dim; ++j) {
      long s = 0;
      for (int t = 0; t < n; ++t) s += long(z[t]) * digs[j][t];
      zdot[j] = static_cast<int>(s % p);
    }
    for (long xi = 0; xi < dim; ++xi, advance(x)) {
      const auto jpx = shift_table(digs, x, p);
      int weight = 0;
      for (int t = 0; t < n; ++t)
        if (x[t] != 0 || z[t] != 0) ++weight;
      Cplx ta = 0;
      for (long j = 0; j < dim; ++j) ta += std::conj(omega[zdot[j]]) * pi.at(jpx[j], j);
      wa[weight] += std::norm(ta);
      Cplx tb = 0;
      for (long j = 0; j < dim; ++j)
        for (long l = 0; l < dim; ++l)
          tb += omega[((zdot[l] - zdot[j]) % p + p) % p] * pi.at(jpx[j], jpx[l]) * pi.at(l, j);
      wb[weight] += tb.real();
      wb_imag[weight] += tb.imag();
    }
  }

  const Int denom = int_pow(p, n);
  auto snap = [&](double v, const char* side) {
    const double scaled = v * double(denom.get_d());
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > kResidual * std::max(1.0, std::abs(scaled)))
      throw inconsistency_error(std::string(side) + " weight does not round to a p^-n rational");
    Rat r(Int(static_cast<long>(rounded)), denom);
    r.canonicalize();
    return r;
  };
  WeightPair out;
  out.primary.n = out.dual.n = n;
  out.primary.D = out.dual.D = p;
  out.primary.kind = WeightKind::SlPrimary;
  out.dual.kind = WeightKind::SlDual;
  out.primary.trace = out.dual.trace = Rat(rank);
  for (int j = 0; j <= n; ++j) {
    if (std::abs(wb_imag[j]) > kResidual)
      throw inconsistency_error("dual weight has an imaginary residue");
    out.primary.values.push_back(snap(wa[j], "primary"));
    out.dual.values.push_back(snap(wb[j], "dual"));
  }
  return out;
}

}  // namespace qweight

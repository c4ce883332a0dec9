#include "qweight/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "qweight/errors.hpp"
#include "zp_linalg.hpp"

namespace qweight {

namespace {

using detail::Mat;
using detail::Row;

constexpr long kSpanBudget = 1L << 24;

Row to_row(const PauliElement& a) {
  Row r(2 * a.n());
  for (int i = 0; i < a.n(); ++i) {
    r[i] = a.x[i];
    r[a.n() + i] = a.z[i];
  }
  return r;
}

Row constraint_row(const Row& g, int n, int p) {
  Row r(2 * n);
  for (int i = 0; i < n; ++i) {
    r[i] = static_cast<std::uint8_t>((p - g[n + i]) % p);
    r[n + i] = g[i];
  }
  return r;
}

long checked_span_size(int p, int m, const char* what) {
  long size = 1;
  for (int i = 0; i < m; ++i) {
    size *= p;
    if (size > kSpanBudget)
      throw budget_error(std::string(what) + " span exceeds 2^24 elements");
  }
  return size;
}

// Weight histogram over the additive span of (x|z) rows, visited by a
// carry-propagating odometer so each step is one row addition.
std::vector<long> span_census(int p, int n, const Mat& basis) {
  const int m = static_cast<int>(basis.size());
  const long size = checked_span_size(p, m, "census");
  std::vector<long> hist(n + 1, 0);
  Row cur(2 * n, 0);
  std::vector<int> digit(m, 0);
  auto add_row = [&](const Row& g) {
    for (int i = 0; i < 2 * n; ++i) {
      int v = cur[i] + g[i];
      cur[i] = static_cast<std::uint8_t>(v >= p ? v - p : v);
    }
  };
  for (long step = 0;; ++step) {
    int w = 0;
    for (int i = 0; i < n; ++i)
      if (cur[i] != 0 || cur[n + i] != 0) ++w;
    ++hist[w];
    if (step + 1 == size) break;
    int i = 0;
    for (;; ++i) {
      add_row(basis[i]);
      if (++digit[i] < p) break;
      digit[i] = 0;
    }
  }
  return hist;
}

// Span histogram of exact support masks, for the fine-grained tables.
std::vector<long> span_support_census(int p, int n, const Mat& basis) {
  const int m = static_cast<int>(basis.size());
  const long size = checked_span_size(p, m, "census");
  std::vector<long> cnt(std::size_t(1) << n, 0);
  Row cur(2 * n, 0);
  std::vector<int> digit(m, 0);
  for (long step = 0;; ++step) {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (cur[i] != 0 || cur[n + i] != 0) mask |= std::uint32_t(1) << i;
    ++cnt[mask];
    if (step + 1 == size) break;
    int i = 0;
    for (;; ++i) {
      for (int j = 0; j < 2 * n; ++j) {
        int v = cur[j] + basis[i][j];
        cur[j] = static_cast<std::uint8_t>(v >= p ? v - p : v);
      }
      if (++digit[i] < p) break;
      digit[i] = 0;
    }
  }
  return cnt;
}

Mat stab_rows(const StabilizerCode& code) {
  Mat rows;
  for (const auto& g : code.stabilizers) rows.push_back(to_row(g));
  return rows;
}

// Basis of the symplectic orthocomplement of the given rows in Z_p^{2n}.
Mat orthocomplement(const Mat& rows, int n, int p) {
  Mat con;
  for (const auto& g : rows) con.push_back(constraint_row(g, n, p));
  if (con.empty()) con.push_back(Row(2 * n, 0));
  return detail::nullspace(con, p);
}

// Basis of {v in span(rows) : supp(v) within keep}, written on keep sites.
Mat restrict_subspace(const Mat& rows, int n, int p, const std::vector<int>& keep) {
  const int m = static_cast<int>(rows.size());
  std::vector<bool> kept(n, false);
  for (int s : keep) kept[s] = true;
  Mat con;  // constraints on coefficient vectors: zero x and z on traced sites
  for (int s = 0; s < n; ++s) {
    if (kept[s]) continue;
    Row cx(m), cz(m);
    for (int i = 0; i < m; ++i) {
      cx[i] = rows[i][s];
      cz[i] = rows[i][n + s];
    }
    con.push_back(std::move(cx));
    con.push_back(std::move(cz));
  }
  if (con.empty()) con.push_back(Row(m, 0));
  const Mat coeffs = m == 0 ? Mat{} : detail::nullspace(con, p);
  Mat out;
  const int np = static_cast<int>(keep.size());
  for (const auto& c : coeffs) {
    Row v(2 * np, 0);
    for (int i = 0; i < m; ++i) {
      if (c[i] == 0) continue;
      for (int j = 0; j < np; ++j) {
        const int s = keep[j];
        v[j] = static_cast<std::uint8_t>((v[j] + c[i] * rows[i][s]) % p);
        v[np + j] = static_cast<std::uint8_t>((v[np + j] + c[i] * rows[i][n + s]) % p);
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<int> sorted_site_list(const StabilizerCode& code, const std::vector<int>& sites,
                                  const char* what) {
  std::vector<int> v = sites;
  std::sort(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] >= code.n) throw std::domain_error(std::string(what) + " site out of range");
    if (i > 0 && v[i] == v[i - 1]) throw std::domain_error(std::string(what) + " site repeated");
  }
  return v;
}

WeightDistribution from_hist(const std::vector<long>& hist, int n, int p, WeightKind kind,
                             const Rat& scale, const Rat& trace) {
  WeightDistribution w;
  w.n = n;
  w.D = p;
  w.kind = kind;
  w.trace = trace;
  w.values.reserve(n + 1);
  for (int j = 0; j <= n; ++j) w.values.push_back(scale * hist[j]);
  return w;
}

}  // namespace

WeightPair group_sl_weights(const StabilizerCode& code) {
  const int p = code.p, n = code.n;
  const Mat rows = stab_rows(code);
  const Rat K(int_pow(p, code.k));
  const std::vector<long> na = span_census(p, n, rows);
  const std::vector<long> nb = span_census(p, n, orthocomplement(rows, n, p));
  WeightPair out;
  out.primary = from_hist(na, n, p, WeightKind::SlPrimary, K * K, K);
  out.dual = from_hist(nb, n, p, WeightKind::SlDual, K, K);
  return out;
}

Rat fine_grained_unitary(const StabilizerCode& code, std::uint32_t subset) {
  const int p = code.p, n = code.n;
  if (n < 32 && subset >> n) throw std::domain_error("subset mask out of range");
  const int m = n - code.k;
  // rank of the generators restricted to the complement of the subset
  Mat outside;
  for (const auto& g : code.stabilizers) {
    Row r;
    for (int i = 0; i < n; ++i) {
      if (subset & (std::uint32_t(1) << i)) continue;
      r.push_back(g.x[i]);
      r.push_back(g.z[i]);
    }
    if (r.empty()) r.push_back(0);
    outside.push_back(std::move(r));
  }
  const int rk = m == 0 ? 0 : detail::rank(outside, p);
  const int size = __builtin_popcount(subset);
  return dim_pow(p, 2 * code.k + (m - rk) - size);
}

namespace {

std::vector<long> exact_support_counts(const StabilizerCode& code) {
  if (code.n > 16) throw budget_error("fine-grained tables limited to 16 sites");
  return span_support_census(code.p, code.n, stab_rows(code));
}

}  // namespace

std::vector<Rat> fine_grained_exact_table(const StabilizerCode& code) {
  const std::vector<long> cnt = exact_support_counts(code);
  const Rat K2 = dim_pow(code.p, 2 * code.k);
  std::vector<Rat> out(cnt.size());
  for (std::size_t t = 0; t < cnt.size(); ++t) out[t] = K2 * cnt[t];
  return out;
}

std::vector<Rat> fine_grained_unitary_table(const StabilizerCode& code) {
  std::vector<long> cnt = exact_support_counts(code);
  const int n = code.n;
  // subset-sum (zeta) transform: cnt[S] <- sum over subsets T of S
  for (int i = 0; i < n; ++i)
    for (std::uint32_t s = 0; s < cnt.size(); ++s)
      if (s & (std::uint32_t(1) << i)) cnt[s] += cnt[s ^ (std::uint32_t(1) << i)];
  const Rat K2 = dim_pow(code.p, 2 * code.k);
  std::vector<Rat> out(cnt.size());
  for (std::uint32_t s = 0; s < cnt.size(); ++s)
    out[s] = K2 * cnt[s] * dim_pow(code.p, -__builtin_popcount(s));
  return out;
}

Rat shadow_direct(const StabilizerCode& code, std::uint32_t subset) {
  if (code.n < 32 && subset >> code.n) throw std::domain_error("subset mask out of range");
  const std::vector<Rat> ap = fine_grained_unitary_table(code);
  Rat acc = 0;
  for (std::uint32_t s = 0; s < ap.size(); ++s) {
    if (__builtin_popcount(s & subset) & 1)
      acc -= ap[s];
    else
      acc += ap[s];
  }
  return acc;
}

WeightPair reduced_weights(const StabilizerCode& code, const std::vector<int>& traced) {
  const int p = code.p, n = code.n;
  const std::vector<int> traced_sorted = sorted_site_list(code, traced, "traced");
  std::vector<int> keep;
  {
    std::vector<bool> out(n, false);
    for (int s : traced_sorted) out[s] = true;
    for (int i = 0; i < n; ++i)
      if (!out[i]) keep.push_back(i);
  }
  const int np = static_cast<int>(keep.size());
  const int nv = static_cast<int>(traced_sorted.size());
  const Mat sub = restrict_subspace(stab_rows(code), n, p, keep);
  const int mp = static_cast<int>(sub.size());

  const std::vector<long> na = span_census(p, np, sub);
  const std::vector<long> nb = span_census(p, np, orthocomplement(sub, np, p));
  // M = D^|V| tr_V(projector) has trace p^(|V|+k).
  const Rat trace = dim_pow(p, nv + code.k);
  WeightPair out;
  out.primary =
      from_hist(na, np, p, WeightKind::SlPrimary, dim_pow(p, 2 * (code.k + nv)), trace);
  out.dual =
      from_hist(nb, np, p, WeightKind::SlDual, dim_pow(p, 3 * nv + 2 * code.k - n + mp), trace);
  return out;
}

StabilizerCode purify(const StabilizerCode& code) {
  const int p = code.p, n = code.n, k = code.k;
  std::vector<PauliElement> gens;
  auto extend = [&](const PauliElement& g, int site, int xe, int ze) {
    std::vector<std::uint8_t> x = g.x, z = g.z;
    x.resize(n + k, 0);
    z.resize(n + k, 0);
    if (site >= 0) {
      x[site] = static_cast<std::uint8_t>(xe);
      z[site] = static_cast<std::uint8_t>(ze);
    }
    return make_pauli(p, std::move(x), std::move(z), g.phase);
  };
  for (const auto& g : code.stabilizers) gens.push_back(extend(g, -1, 0, 0));
  for (int i = 0; i < k; ++i) {
    gens.push_back(extend(code.logical_x[i], n + i, 1, 0));
    gens.push_back(extend(code.logical_z[i], n + i, 0, p - 1));
  }
  return make_code(p, n + k, std::move(gens));
}

long subsystem_entropy(const StabilizerCode& code, const std::vector<int>& sites) {
  if (code.k != 0) throw std::domain_error("entropy needs a pure (k = 0) code");
  const std::vector<int> keep = sorted_site_list(code, sites, "subsystem");
  const Mat sub = restrict_subspace(stab_rows(code), code.n, code.p, keep);
  return static_cast<long>(keep.size()) - static_cast<long>(sub.size());
}

}  // namespace qweight

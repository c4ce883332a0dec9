#include "qweight/enumerators.hpp"

#include <algorithm>
#include <stdexcept>

#include "qweight/combinatorics.hpp"
#include "qweight/errors.hpp"

namespace qweight {

namespace {

long k_as_long(const CodeParams& p) {
  if (!is_small_int(p.k)) throw std::domain_error("parameters need an integer log-dimension k");
  return p.k.get_num().get_si();
}

void require_closed_form(const CodeParams& p) {
  if (p.n < 1 || p.D < 2 || p.d < 1)
    throw std::domain_error("invalid parameters " + params_to_string(p));
  if (!is_qmds_form(p) && !is_ame_form(p))
    throw std::domain_error("parameters " + params_to_string(p) +
                            " are neither Singleton-saturating nor an AME point");
}

void require_kind(const WeightDistribution& w, WeightKind kind, const char* who) {
  if (w.kind != kind)
    throw std::domain_error(std::string(who) + ": expected a " + kind_name(kind) + " list, got " +
                            kind_name(w.kind));
  if (w.values.size() != static_cast<std::size_t>(w.n) + 1)
    throw std::domain_error(std::string(who) + ": weight list size must be n + 1");
}

}  // namespace

std::string kind_name(WeightKind kind) {
  switch (kind) {
    case WeightKind::SlPrimary: return "sl";
    case WeightKind::SlDual: return "sl-dual";
    case WeightKind::UnitaryPrimary: return "unitary";
    case WeightKind::UnitaryDual: return "unitary-dual";
    case WeightKind::Shadow: return "shadow";
  }
  return "?";
}

bool operator==(const WeightDistribution& lhs, const WeightDistribution& rhs) {
  return lhs.n == rhs.n && lhs.D == rhs.D && lhs.kind == rhs.kind && lhs.trace == rhs.trace &&
         lhs.values == rhs.values;
}

bool operator==(const CodeParams& lhs, const CodeParams& rhs) {
  return lhs.n == rhs.n && lhs.k == rhs.k && lhs.d == rhs.d && lhs.D == rhs.D;
}

std::string params_to_string(const CodeParams& p) {
  return "((" + std::to_string(p.n) + "," + to_string(p.k) + "," + std::to_string(p.d) + "))_" +
         std::to_string(p.D);
}

bool is_qmds_form(const CodeParams& p) {
  if (!is_small_int(p.k)) return false;
  long k = p.k.get_num().get_si();
  return p.n >= 1 && p.D >= 2 && p.d >= 1 && k >= 0 && k == p.n - 2 * p.d + 2;
}

bool is_ame_form(const CodeParams& p) {
  return p.n >= 1 && p.D >= 2 && p.k == 0 && p.d == p.n / 2 + 1;
}

CodeParams qmds_params(int n, const Rat& k, int D) {
  CodeParams p{n, k, 1, D};
  if (n < 1 || D < 2) throw std::domain_error("invalid parameters " + params_to_string(p));
  if (!is_small_int(k) || k < 0 || k > n)
    throw std::domain_error("log-dimension k must be an integer in [0, n]");
  long kl = k.get_num().get_si();
  if ((n + kl) % 2 == 0) {
    p.d = static_cast<int>((n - kl + 2) / 2);
  } else if (kl == 0) {
    p.d = n / 2 + 1;  // AME point for odd n
  } else {
    throw std::domain_error("n + k must be even unless k = 0");
  }
  return p;
}

Int code_dimension(const CodeParams& p) {
  long k = k_as_long(p);
  if (k < 0) throw std::domain_error("negative log-dimension has no integer dimension");
  return int_pow(p.D, static_cast<unsigned long>(k));
}

WeightDistribution qmds_unitary(const CodeParams& p) {
  require_closed_form(p);
  const long k = k_as_long(p);
  const long a2 = p.n + k;  // twice the Singleton midpoint
  WeightDistribution w;
  w.n = p.n;
  w.D = p.D;
  w.kind = WeightKind::UnitaryPrimary;
  w.trace = Rat(code_dimension(p));
  w.values.resize(p.n + 1);
  for (int j = 0; j <= p.n; ++j) {
    long e = 2 * k - std::min<long>(a2 - j, j);
    w.values[j] = Rat(binomial(p.n, j)) * dim_pow(p.D, e);
  }
  return w;
}

WeightDistribution qmds_sl(const CodeParams& p) {
  require_closed_form(p);
  const long k = k_as_long(p);
  const long a2 = p.n + k;
  WeightDistribution w;
  w.n = p.n;
  w.D = p.D;
  w.kind = WeightKind::SlPrimary;
  w.trace = Rat(code_dimension(p));
  w.values.resize(p.n + 1);
  for (int j = 0; j <= p.n; ++j) {
    Rat acc(0);
    for (int i = 0; i <= j; ++i) {
      Rat term = Rat(binomial(j, i)) * dim_pow(p.D, 2 * k + i - std::min<long>(a2 - i, i));
      if ((j - i) & 1)
        acc -= term;
      else
        acc += term;
    }
    w.values[j] = Rat(binomial(p.n, j)) * acc;
  }
  return w;
}

WeightDistribution unitary_from_sl(const WeightDistribution& w) {
  if (w.kind != WeightKind::SlPrimary && w.kind != WeightKind::SlDual)
    throw std::domain_error("unitary_from_sl: expected an sl list, got " + kind_name(w.kind));
  if (w.values.size() != static_cast<std::size_t>(w.n) + 1)
    throw std::domain_error("unitary_from_sl: weight list size must be n + 1");
  WeightDistribution out = w;
  out.kind = w.kind == WeightKind::SlPrimary ? WeightKind::UnitaryPrimary : WeightKind::UnitaryDual;
  for (int j = 0; j <= w.n; ++j) {
    Rat acc(0);
    for (int i = 0; i <= j; ++i) acc += Rat(binomial(w.n - i, w.n - j)) * w.values[i];
    out.values[j] = acc * dim_pow(w.D, -j);
  }
  return out;
}

WeightDistribution sl_from_unitary(const WeightDistribution& w) {
  if (w.kind != WeightKind::UnitaryPrimary && w.kind != WeightKind::UnitaryDual)
    throw std::domain_error("sl_from_unitary: expected a unitary list, got " + kind_name(w.kind));
  if (w.values.size() != static_cast<std::size_t>(w.n) + 1)
    throw std::domain_error("sl_from_unitary: weight list size must be n + 1");
  WeightDistribution out = w;
  out.kind = w.kind == WeightKind::UnitaryPrimary ? WeightKind::SlPrimary : WeightKind::SlDual;
  // Forward substitution: A_j = D^j A'_j - sum_{i<j} C(n-i, n-j) A_i.
  for (int j = 0; j <= w.n; ++j) {
    Rat acc = dim_pow(w.D, j) * w.values[j];
    for (int i = 0; i < j; ++i) acc -= Rat(binomial(w.n - i, w.n - j)) * out.values[i];
    out.values[j] = acc;
  }
  return out;
}

WeightDistribution sl_from_unitary_via_form(const WeightDistribution& w) {
  if (w.kind != WeightKind::UnitaryPrimary && w.kind != WeightKind::UnitaryDual)
    throw std::domain_error("sl_from_unitary_via_form: expected a unitary list, got " +
                            kind_name(w.kind));
  WeightDistribution out = w;
  out.kind = w.kind == WeightKind::UnitaryPrimary ? WeightKind::SlPrimary : WeightKind::SlDual;
  out.values = substitute(to_form(w), Rat(1), Rat(-1), Rat(0), Rat(w.D)).coeffs;
  return out;
}

WeightDistribution dual_unitary(const WeightDistribution& w) {
  if (w.kind != WeightKind::UnitaryPrimary && w.kind != WeightKind::UnitaryDual)
    throw std::domain_error("dual_unitary: expected a unitary list, got " + kind_name(w.kind));
  if (w.values.size() != static_cast<std::size_t>(w.n) + 1)
    throw std::domain_error("dual_unitary: weight list size must be n + 1");
  WeightDistribution out = w;
  out.kind = w.kind == WeightKind::UnitaryPrimary ? WeightKind::UnitaryDual : WeightKind::UnitaryPrimary;
  for (int j = 0; j <= w.n; ++j) out.values[j] = w.values[w.n - j];
  return out;
}

WeightDistribution shadow(const WeightDistribution& w) {
  require_kind(w, WeightKind::UnitaryPrimary, "shadow");
  WeightDistribution out = w;
  out.kind = WeightKind::Shadow;
  for (int j = 0; j <= w.n; ++j) {
    Rat acc(0);
    for (int l = 0; l <= w.n; ++l) acc += Rat(krawtchouk(w.n - j, l, w.n)) * w.values[l];
    out.values[j] = acc;
  }
  return out;
}

WeightDistribution shadow_via_form(const WeightDistribution& w) {
  require_kind(w, WeightKind::UnitaryPrimary, "shadow_via_form");
  WeightDistribution out = w;
  out.kind = WeightKind::Shadow;
  out.values = substitute(to_form(w), Rat(1), Rat(1), Rat(-1), Rat(1)).coeffs;
  return out;
}

BivariateForm to_form(const WeightDistribution& w) {
  if (w.values.size() != static_cast<std::size_t>(w.n) + 1)
    throw std::domain_error("to_form: weight list size must be n + 1");
  return BivariateForm(w.n, w.values);
}

CodeCheckResult code_check(const WeightDistribution& A, const WeightDistribution& B, const Rat& K) {
  require_kind(A, WeightKind::SlPrimary, "code_check");
  require_kind(B, WeightKind::SlDual, "code_check");
  if (A.n != B.n || A.D != B.D)
    throw std::domain_error("code_check: A and B describe different systems");
  if (K <= 0) throw std::domain_error("code_check: K must be positive");

  for (int j = 0; j <= A.n; ++j) {
    if (K * B.values[j] < A.values[j])
      throw inconsistency_error("code_check: K*B_" + std::to_string(j) + " = " +
                                to_string(Rat(K * B.values[j])) + " < A_" + std::to_string(j) +
                                " = " + to_string(A.values[j]) +
                                "; no rank-K projector has such weights");
  }

  CodeCheckResult res;
  res.distance = A.n + 1;
  for (int j = 1; j <= A.n; ++j) {
    const bool violated = (K == 1) ? (A.values[j] != 0) : (K * B.values[j] != A.values[j]);
    if (violated) {
      res.distance = j;
      break;
    }
  }
  res.pure = true;
  for (int j = 1; j < res.distance; ++j)
    if (A.values[j] != 0) res.pure = false;
  return res;
}

}  // namespace qweight

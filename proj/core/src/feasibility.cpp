#include "qweight/feasibility.hpp"

#include <stdexcept>

namespace qweight {

std::string status_name(FeasStatus s) {
  switch (s) {
    case FeasStatus::NotExcluded: return "not-excluded";
    case FeasStatus::Excluded: return "excluded";
    case FeasStatus::Trivial: return "trivial";
  }
  return "?";
}

std::string reason_name(FeasReason r) {
  switch (r) {
    case FeasReason::None: return "none";
    case FeasReason::Singleton: return "singleton";
    case FeasReason::LengthBound: return "length";
    case FeasReason::Shadow: return "shadow";
    case FeasReason::Pairing: return "pairing";
    case FeasReason::Propagation: return "propagation";
  }
  return "?";
}

bool singleton_ok(const CodeParams& p) { return p.k <= Rat(p.n - 2 * (p.d - 1)); }

bool length_bound_ok(const CodeParams& p) {
  if (!is_qmds_form(p) || p.d < 3)
    throw std::domain_error("length bound needs Singleton-saturating parameters with d >= 3");
  return p.n <= p.D * p.D + p.d - 2;
}

std::optional<ShadowWitness> shadow_witness(const CodeParams& p) {
  const WeightDistribution s = shadow(qmds_unitary(p));
  for (int j = 0; j <= s.n; ++j)
    if (s.values[j] < 0) return ShadowWitness{j, s.values[j]};
  return std::nullopt;
}

FeasibilityVerdict layered_check(const CodeParams& p) {
  if (p.n < 1 || p.d < 1 || p.d > p.n + 1 || p.D < 2)
    throw std::domain_error("bad parameter set");
  FeasibilityVerdict v;
  v.params = p;
  if (!singleton_ok(p)) {
    v.status = FeasStatus::Excluded;
    v.reason = FeasReason::Singleton;
    return v;
  }
  if (p.d <= 2) {
    v.status = FeasStatus::Trivial;
    return v;
  }
  if (!is_qmds_form(p) && !is_ame_form(p))
    throw std::domain_error(
        "parameters below the Singleton bound have no closed-form enumerator");
  if (is_qmds_form(p) && !length_bound_ok(p)) {
    v.status = FeasStatus::Excluded;
    v.reason = FeasReason::LengthBound;
    return v;
  }
  if (auto w = shadow_witness(p)) {
    v.status = FeasStatus::Excluded;
    v.reason = FeasReason::Shadow;
    v.witness = w;
    return v;
  }
  return v;
}

int qubit_max_distance(int n, bool rank_one) {
  if (n < 1) throw std::domain_error("length must be positive");
  if (rank_one) return 2 * (n / 6) + (n % 6 == 5 ? 3 : 2);
  return 2 * ((n + 1) / 6) + (n % 6 == 4 ? 2 : 1);
}

bool scott_ame_check(int n, int D) {
  if (n < 2 || D < 2) throw std::domain_error("bad parameter set");
  if (n % 2 == 0) return n <= 2 * (D * D - 1);
  return n <= 2 * D * (D + 1) - 1;
}

FamilyScan family_scan(int N, int D) {
  if (N < 4 || N % 2 != 0) throw std::domain_error("family sum must be even and at least 4");
  if (D < 2) throw std::domain_error("alphabet must be at least 2");
  const int a = N / 2;
  FamilyScan scan;
  scan.N = N;
  scan.D = D;
  for (int d = a + 1; d >= 3; --d) {
    const CodeParams p = qmds_params(a + d - 1, Rat(a - d + 1), D);
    FeasibilityVerdict v;
    v.params = p;
    if (!length_bound_ok(p)) {
      v.status = FeasStatus::Excluded;
      v.reason = FeasReason::LengthBound;
    } else if (auto w = shadow_witness(p)) {
      v.status = FeasStatus::Excluded;
      v.reason = FeasReason::Shadow;
      v.witness = w;
    }
    scan.chain.push_back(std::move(v));
  }

  // the k = 0 and k = 1 members stand or fall together
  if (a >= 3 && scan.chain.size() >= 2) {
    auto& k0 = scan.chain[0];
    auto& k1 = scan.chain[1];
    if (k0.status == FeasStatus::Excluded && k1.status != FeasStatus::Excluded) {
      k1.status = FeasStatus::Excluded;
      k1.reason = FeasReason::Pairing;
    }
  }
  // exclusions propagate from smaller d upward (chain is descending in d)
  bool seen = false;
  for (auto it = scan.chain.rbegin(); it != scan.chain.rend(); ++it) {
    if (it->status == FeasStatus::Excluded)
      seen = true;
    else if (seen) {
      it->status = FeasStatus::Excluded;
      it->reason = FeasReason::Propagation;
    }
  }

  for (const auto& v : scan.chain)
    if (v.status != FeasStatus::Excluded) {
      scan.upper = v;
      return scan;
    }
  scan.upper.params = CodeParams{a + 1, Rat(a - 1), 2, D};
  scan.upper.status = FeasStatus::Trivial;
  return scan;
}

std::vector<TableRow> make_table(int D, int maxN, const Catalog* catalog) {
  std::vector<TableRow> rows;
  for (int N = 4; N <= maxN; N += 2) {
    TableRow row;
    row.N = N;
    row.upper = family_scan(N, D).upper;
    if (catalog) row.lower = catalog->lower(N, D);
    row.optimal = row.lower && row.upper.params == row.lower->params;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qweight

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qweight/enumerators.hpp"

namespace qweight {

// One catalog record: a (possibly parametric) family of known codes. The
// params entries are integer expressions in the variables q (alphabet), d
// (distance) and s (free shift), using + - * % ^, parentheses and the
// functions binom, min, max, cdiv, fdiv. Matching walks s over [s_lo, s_hi]
// and accepts when the evaluated (n, k, d) triple equals the query, the
// optional d range contains d, and the optional constraint holds. The q
// field is a conjunction of comparisons in q plus the atoms any/two_power.
struct CatalogEntry {
  std::string family;
  std::string q_constraint = "any";
  std::array<std::string, 3> params;
  std::string d_lo, d_hi;  // optional; empty = no d gate
  std::string s_lo = "0", s_hi = "0";
  std::string constraint;  // optional extra predicate
  std::string cite;
};

struct CatalogHit {
  CodeParams params;
  std::string cite;
  std::string family;
  bool lifted = false;  // reached through the pure-state lift of a k=1 code
};

// Known-code lookup table, loaded from a JSON-lines file. Entry order in
// the file is the citation precedence.
class Catalog {
 public:
  static Catalog load(const std::string& path);
  static Catalog from_entries(std::vector<CatalogEntry> entries);

  const std::vector<CatalogEntry>& entries() const { return entries_; }

  // First entry producing exactly ((n, k, d))_D. Queries outside the
  // Singleton-saturating grid (k != n - 2d + 2 or k < 0) and non-prime-power
  // D never match.
  std::optional<CatalogHit> find(int n, int k, int d, int D) const;

  // Best known member of the even family n + k = N: scans d downward from
  // N/2 + 1 and also accepts a k = 0 member through purification of a known
  // (n-1, 1, d-1) code.
  std::optional<CatalogHit> lower(int N, int D) const;

 private:
  std::vector<CatalogEntry> entries_;
};

// QWEIGHT_CATALOG env var when set, else the build-time default path.
std::string default_catalog_path();

bool is_prime_power(int q);

}  // namespace qweight

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qweight/catalog.hpp"
#include "qweight/enumerators.hpp"

namespace qweight {

enum class FeasStatus { NotExcluded, Excluded, Trivial };

enum class FeasReason {
  None,
  Singleton,    // K > D^(n - 2(d-1))
  LengthBound,  // Singleton-saturating with d >= 3 and n > D^2 + d - 2
  Shadow,       // some shadow coefficient is negative
  Pairing,      // k = 1 partner of an excluded k = 0 member of the same family
  Propagation,  // a smaller-distance member of the same family is excluded
};

std::string status_name(FeasStatus s);
std::string reason_name(FeasReason r);

struct ShadowWitness {
  int index = 0;
  Rat value;
};

struct FeasibilityVerdict {
  CodeParams params;
  FeasStatus status = FeasStatus::NotExcluded;
  FeasReason reason = FeasReason::None;
  std::optional<ShadowWitness> witness;
};

// K <= D^(n - 2(d-1)), evaluated exactly on the rational exponent.
bool singleton_ok(const CodeParams& p);

// n <= D^2 + d - 2 for Singleton-saturating parameters with d >= 3.
bool length_bound_ok(const CodeParams& p);

// First negative shadow coefficient of the closed-form enumerator, if any.
std::optional<ShadowWitness> shadow_witness(const CodeParams& p);

// Full decision ladder for one parameter set: Singleton bound first (any
// parameters), then d <= 2 is Trivial, then the closed-form layers (length
// bound for even n + k, shadow coefficients) for Singleton-saturating
// parameters. Parameters strictly below the Singleton bound have no
// closed-form enumerator and raise std::domain_error.
FeasibilityVerdict layered_check(const CodeParams& p);

// Largest admissible distance for qubit codes of length n:
// 2 floor(n/6) + 2 for rank one (+1 more when n = 5 mod 6),
// 2 floor((n+1)/6) + 1 for K > 1 (+1 more when n = 4 mod 6).
int qubit_max_distance(int n, bool rank_one);

// Length cap for maximally entangled pure states: n <= 2(D^2 - 1) for even
// n, n <= 2D(D + 1) - 1 for odd n.
bool scott_ame_check(int n, int D);

// All Singleton-saturating members with n + k = N share one family; chain
// holds their verdicts for d = N/2 + 1 down to 3 (in that order), after
// closing exclusions downward in d (Propagation) and across the k = 0 /
// k = 1 pair (Pairing). upper is the largest-d member not excluded, falling
// back to the always-constructible d = 2 member.
struct FamilyScan {
  int N = 0;
  int D = 2;
  std::vector<FeasibilityVerdict> chain;
  FeasibilityVerdict upper;
};

FamilyScan family_scan(int N, int D);

struct TableRow {
  int N = 0;
  FeasibilityVerdict upper;
  std::optional<CatalogHit> lower;
  bool optimal = false;  // upper and lower agree on (n, k, d)
};

// One row per even N in [4, maxN]. The catalog is optional; without it the
// lower column stays empty.
std::vector<TableRow> make_table(int D, int maxN, const Catalog* catalog);

}  // namespace qweight

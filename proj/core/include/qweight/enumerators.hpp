#pragma once

#include <string>
#include <vector>

#include "qweight/bivariate_form.hpp"
#include "qweight/rational.hpp"

namespace qweight {

// The five enumerator flavors tracked by WeightDistribution. "sl" lists count
// error-basis overlaps weight by weight; "unitary" lists are the subset-purity
// averages of the same projector; shadow is the signed Krawtchouk transform.
enum class WeightKind { SlPrimary, SlDual, UnitaryPrimary, UnitaryDual, Shadow };

std::string kind_name(WeightKind kind);

// Exact weight list of one flavor. trace records the trace convention of the
// underlying (possibly hypothetical) projector; for sl-primary lists
// values[0] == trace^2 and for unitary-primary lists values[0] == trace^2 as
// well, since C(n,0) leaves only the full-trace term.
struct WeightDistribution {
  int n = 0;
  int D = 2;
  WeightKind kind = WeightKind::SlPrimary;
  Rat trace = 1;
  std::vector<Rat> values;  // size n + 1, index = weight
};

bool operator==(const WeightDistribution& lhs, const WeightDistribution& rhs);

// Parameter set ((n, K = D^k, d))_D with exact rational log-dimension k, so
// subspaces whose dimension is not a power of D stay representable.
struct CodeParams {
  int n = 1;
  Rat k = 0;
  int d = 1;
  int D = 2;
};

bool operator==(const CodeParams& lhs, const CodeParams& rhs);
std::string params_to_string(const CodeParams& p);

// k and d saturate the Singleton bound: k = n - 2d + 2 with integer k >= 0.
bool is_qmds_form(const CodeParams& p);
// Pure-state parameters of a maximally entangled subspace: K = 1 and
// d = floor(n/2) + 1 (any n; coincides with QMDS form when n is even).
bool is_ame_form(const CodeParams& p);

// Builds Singleton-saturating parameters from (n, k, D): d = (n - k + 2) / 2
// when n + k is even, the AME distance when k = 0 and n is odd.
CodeParams qmds_params(int n, const Rat& k, int D);

// Explicit dimension K = D^k; requires integer k >= 0.
Int code_dimension(const CodeParams& p);

// Closed-form unitary weights of a Singleton-saturating code,
//
//     A'_j = C(n, j) D^(2k - min(2a - j, j)),   2a = n + k.
//
// Accepts QMDS-form or AME-form parameters; anything else is a domain error.
WeightDistribution qmds_unitary(const CodeParams& p);

// Closed-form sl weights of the same code, obtained from the subset sums by
// inclusion-exclusion over nested subsets:
//
//     A_j = C(n, j) sum_i C(j, i) (-1)^(j-i) D^(2k + i - min(2a - i, i)).
WeightDistribution qmds_sl(const CodeParams& p);

// Subset-purity average of sl weights:
//
//     A'_j = D^(-j) sum_{i <= j} C(n-i, n-j) A_i,
//
// mapping sl-primary to unitary-primary and sl-dual to unitary-dual.
WeightDistribution unitary_from_sl(const WeightDistribution& w);

// Exact inverse of unitary_from_sl via forward triangular solve.
WeightDistribution sl_from_unitary(const WeightDistribution& w);

// Same inverse, computed independently through the polynomial substitution
// A(x, y) = A'(x - y, D y). Kept as a second algebraic route on purpose.
WeightDistribution sl_from_unitary_via_form(const WeightDistribution& w);

// Rains duality: reversing a unitary list swaps primary and dual flavors.
WeightDistribution dual_unitary(const WeightDistribution& w);

// Shadow enumerator S_j = sum_l K_{n-j}(l; n) A'_l of a unitary-primary list.
// Every coefficient must be non-negative for a physical state.
WeightDistribution shadow(const WeightDistribution& w);

// Same transform through the substitution S(x, y) = A'(x + y, y - x);
// independent route used to cross-check the Krawtchouk sum.
WeightDistribution shadow_via_form(const WeightDistribution& w);

// Views an enumerator as the homogeneous polynomial sum_j values[j] x^(n-j) y^j.
BivariateForm to_form(const WeightDistribution& w);

struct CodeCheckResult {
  int distance = 1;  // n + 1 when no weight violates the code conditions
  bool pure = false;
};

// Decides the distance certified by an (A, B) pair of rank-K weights:
// the conditions K B_j = A_j must hold for all j < d. Rank-one projectors
// have B = A identically, so their distance is set by the first nonvanishing
// weight instead (such codes are pure by convention). Throws
// inconsistency_error when K B_j < A_j anywhere, since no projector of rank
// K produces such a pair.
CodeCheckResult code_check(const WeightDistribution& A, const WeightDistribution& B, const Rat& K);

}  // namespace qweight

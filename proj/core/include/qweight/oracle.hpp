#pragma once

#include <cstdint>
#include <vector>

#include "qweight/enumerators.hpp"
#include "qweight/stabilizer.hpp"

namespace qweight {

// A matched (primary, dual) pair of weight lists for one operator.
struct WeightPair {
  WeightDistribution primary;
  WeightDistribution dual;
};

// Exact sl weight pair of a stabilizer projector by enumerating the
// generator span (A side) and its symplectic orthocomplement (B side):
// A_j = K^2 N_j(S), B_j = K N_j(S-perp). Enumeration budget: p^(n-k) and
// p^(n+k) at most 2^24 combinations each.
WeightPair group_sl_weights(const StabilizerCode& code);

// Subset-resolved unitary weight of one site subset (bit i = site i),
// A'_S = K^2 |S restricted to S| / D^|S|, computed by a rank count, so any
// code size passes. Summing over all subsets of size j recovers the
// unitary weights up to the C(n, j) convention.
Rat fine_grained_unitary(const StabilizerCode& code, std::uint32_t subset);

// Full tables over all 2^n subsets (n <= 16): exact-support counts
// A_T = K^2 #{g : supp(g) = T} and their subset-sum transform A'_S.
std::vector<Rat> fine_grained_exact_table(const StabilizerCode& code);
std::vector<Rat> fine_grained_unitary_table(const StabilizerCode& code);

// Subset-resolved shadow value sum_S (-1)^|S cap T| A'_S (n <= 16).
Rat shadow_direct(const StabilizerCode& code, std::uint32_t subset);

// Weight pair of M = D^|V| tr_V(projector), the reduction onto the
// complement of the traced sites. The A side enumerates the subgroup
// supported away from V restricted to the remaining n' sites (m' basis
// elements); the B side enumerates the centralizer of that restricted
// group inside the n'-site symplectic space:
//   A_j = p^(2(k+|V|)) N_j(G'),  B_j = p^(3|V|+2k-n+m') N_j(C(G')).
WeightPair reduced_weights(const StabilizerCode& code, const std::vector<int>& traced);

// Appends one reference site per logical pair, coupling logical_x[i] with X
// and logical_z[i] with Z^(p-1), producing a pure (k = 0) code on n+k sites
// whose reduction to the original sites is the maximally mixed code rho.
StabilizerCode purify(const StabilizerCode& code);

// Entanglement entropy (base-p units) of a site subset of a pure code:
// |A| - dim{g in span : supp(g) within A}. Requires k = 0.
long subsystem_entropy(const StabilizerCode& code, const std::vector<int>& sites);

}  // namespace qweight

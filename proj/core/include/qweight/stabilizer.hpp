#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qweight/pauli.hpp"
#include "qweight/rational.hpp"

namespace qweight {

// A stabilizer code on n sites of prime dimension p, defined by n-k
// independent commuting generators, each of operator order p. The code
// subspace has dimension K = p^k. Logical operators, when present, come in
// canonical pairs: logical_x[i] and logical_z[i] commute with the stabilizer
// and with every other pair, and have symplectic form exactly 1 between them.
struct StabilizerCode {
  int p = 2;
  int n = 0;
  int k = 0;
  std::vector<PauliElement> stabilizers;
  std::vector<PauliElement> logical_x;
  std::vector<PauliElement> logical_z;

  Int dimension() const;  // K = p^k
};

// Validates generators (shapes, order p, commutation, independence) and,
// when `logicals` is empty, completes a canonical logical basis by
// symplectic Gram-Schmidt on the quotient of the symplectic orthocomplement.
// Non-empty `logicals` must hold 2k elements ordered X1 Z1 X2 Z2 ... and is
// checked for the canonical pairing instead.
StabilizerCode make_code(int p, int n, std::vector<PauliElement> stabilizers,
                         std::vector<PauliElement> logicals = {});

// Text fixture format, one directive per line ('#' starts a comment):
//   dim 2
//   sites 5
//   stab + X Z Z X I
//   logical + X X X X X
// Phase tokens: + - i -i w^<int> t^<int>. Site symbols: I, Y (qubits only),
// or X[a][Z[b]] / Z[b] with exponents in [1, p-1]. Logical lines, if any,
// must appear in the order X1 Z1 X2 Z2 ... Errors carry <name>:<line>.
StabilizerCode parse_fixture(std::istream& in, const std::string& name = "fixture");
StabilizerCode parse_fixture_file(const std::string& path);

// Uniformly grown random stabilizer state (k = 0) for cross checks.
StabilizerCode random_pure_stabilizer(int p, int n, std::uint64_t seed);

}  // namespace qweight

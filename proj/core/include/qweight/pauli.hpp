#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qweight {

// Generalized Pauli operator tau^phase X^x Z^z on n sites of prime dimension
// p, with X|j> = |j+1 mod p>, Z|j> = w^j |j> for w = exp(2 pi i / p), and
// tau = exp(i pi / p) the canonical square root of w (tau = i for p = 2).
// Phases live in Z_{2p} so Hermitian qubit operators like Y = i XZ fit.
struct PauliElement {
  int p = 2;
  std::vector<std::uint8_t> x, z;
  int phase = 0;  // exponent of tau, reduced mod 2p

  int n() const { return static_cast<int>(x.size()); }
};

PauliElement make_pauli(int p, std::vector<std::uint8_t> x, std::vector<std::uint8_t> z,
                        int phase = 0);

PauliElement identity_pauli(int p, int n);

// Number of sites acted on nontrivially.
int pauli_weight(const PauliElement& a);

// Support as a bitmask, site i -> bit i. Requires n <= 32.
std::uint32_t pauli_support(const PauliElement& a);

// Symplectic form x_a . z_b - z_a . x_b mod p; zero iff the operators commute.
int symplectic_form(const PauliElement& a, const PauliElement& b);

bool pauli_commute(const PauliElement& a, const PauliElement& b);

// Operator product with exact phase tracking:
// (tau^f X^x Z^z)(tau^g X^u Z^v) = tau^(f + g + 2 z.u) X^(x+u) Z^(z+v).
PauliElement pauli_product(const PauliElement& a, const PauliElement& b);

// True when a^p = +1, the condition for a to generate a closed order-p
// cyclic group: phase even for odd p, phase + x.z even for p = 2.
bool pauli_order_divides_p(const PauliElement& a);

// Rendering like "+ X Z2 I XZ" (phase token, then one symbol per site).
std::string pauli_to_string(const PauliElement& a);

}  // namespace qweight

#include "qweight/pauli.hpp"

#include <sstream>
#include <stdexcept>

namespace qweight {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

PauliElement make_pauli(int p, std::vector<std::uint8_t> x, std::vector<std::uint8_t> z,
                        int phase) {
  if (!is_prime(p)) throw std::domain_error("pauli dimension must be prime");
  if (x.size() != z.size()) throw std::domain_error("pauli x/z length mismatch");
  for (auto v : x)
    if (v >= p) throw std::domain_error("pauli x exponent out of range");
  for (auto v : z)
    if (v >= p) throw std::domain_error("pauli z exponent out of range");
  PauliElement a;
  a.p = p;
  a.x = std::move(x);
  a.z = std::move(z);
  a.phase = ((phase % (2 * p)) + 2 * p) % (2 * p);
  return a;
}

PauliElement identity_pauli(int p, int n) {
  return make_pauli(p, std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0), 0);
}

int pauli_weight(const PauliElement& a) {
  int w = 0;
  for (int i = 0; i < a.n(); ++i)
    if (a.x[i] != 0 || a.z[i] != 0) ++w;
  return w;
}

std::uint32_t pauli_support(const PauliElement& a) {
  if (a.n() > 32) throw std::domain_error("support mask limited to 32 sites");
  std::uint32_t m = 0;
  for (int i = 0; i < a.n(); ++i)
    if (a.x[i] != 0 || a.z[i] != 0) m |= std::uint32_t(1) << i;
  return m;
}

int symplectic_form(const PauliElement& a, const PauliElement& b) {
  if (a.p != b.p || a.n() != b.n()) throw std::domain_error("pauli shape mismatch");
  long s = 0;
  for (int i = 0; i < a.n(); ++i) s += long(a.x[i]) * b.z[i] - long(a.z[i]) * b.x[i];
  return static_cast<int>(((s % a.p) + a.p) % a.p);
}

bool pauli_commute(const PauliElement& a, const PauliElement& b) {
  return symplectic_form(a, b) == 0;
}

PauliElement pauli_product(const PauliElement& a, const PauliElement& b) {
  if (a.p != b.p || a.n() != b.n()) throw std::domain_error("pauli shape mismatch");
  const int p = a.p;
  long cross = 0;  // Z^z passing right over X^u picks up w^(z.u) = tau^(2 z.u)
  for (int i = 0; i < a.n(); ++i) cross += long(a.z[i]) * b.x[i];
  std::vector<std::uint8_t> x(a.n()), z(a.n());
  for (int i = 0; i < a.n(); ++i) {
    x[i] = static_cast<std::uint8_t>((a.x[i] + b.x[i]) % p);
    z[i] = static_cast<std::uint8_t>((a.z[i] + b.z[i]) % p);
  }
  long ph = (a.phase + b.phase + 2 * cross) % (2 * p);
  return make_pauli(p, std::move(x), std::move(z), static_cast<int>(ph));
}

bool pauli_order_divides_p(const PauliElement& a) {
  if (a.p == 2) {
    long xz = 0;
    for (int i = 0; i < a.n(); ++i) xz += long(a.x[i]) * a.z[i];
    return (a.phase + xz) % 2 == 0;
  }
  return a.phase % 2 == 0;
}

std::string pauli_to_string(const PauliElement& a) {
  std::ostringstream os;
  const int p = a.p;
  if (a.phase == 0)
    os << '+';
  else if (a.phase == p)
    os << '-';
  else if (p == 2 && a.phase == 1)
    os << 'i';
  else if (p == 2 && a.phase == 3)
    os << "-i";
  else if (a.phase % 2 == 0)
    os << "w^" << a.phase / 2;
  else
    os << "t^" << a.phase;
  for (int i = 0; i < a.n(); ++i) {
    os << ' ';
    const int xi = a.x[i], zi = a.z[i];
    if (xi == 0 && zi == 0) {
      os << 'I';
      continue;
    }
    if (xi != 0) {
      os << 'X';
      if (xi != 1) os << xi;
    }
    if (zi != 0) {
      os << 'Z';
      if (zi != 1) os << zi;
    }
  }
  return os.str();
}

}  // namespace qweight

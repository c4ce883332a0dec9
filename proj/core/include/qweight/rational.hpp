#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qweight {

using Int = mpz_class;
using Rat = mpq_class;

// Renders p/q in lowest terms; integers come out without the "/1".
inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

// Parses the to_string format back. Accepts an optional sign, digits, and an
// optional /denominator part. Anything else is rejected.
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digits_before = false, digits_after = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (seen_slash) throw std::invalid_argument("bad rational literal: " + s);
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digits_after : digits_before) = true;
    } else {
      throw std::invalid_argument("bad rational literal: " + s);
    }
  }
  if (!digits_before || (seen_slash && !digits_after))
    throw std::invalid_argument("bad rational literal: " + s);
  Rat r(s[0] == '+' ? s.substr(1) : s);  // mpq_set_str rejects a leading +
  if (seen_slash && r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

// base^e for integer e of either sign; exact.
inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0) throw std::domain_error("0 raised to a negative power");
  unsigned long mag = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), mpq_numref(base.get_mpq_t()), mag);
  mpz_pow_ui(den.get_mpz_t(), mpq_denref(base.get_mpq_t()), mag);
  Rat out(num, den);
  out.canonicalize();
  if (e < 0) out = 1 / out;
  return out;
}

// D^e with D a small positive integer and e of either sign.
inline Rat dim_pow(long D, long e) {
  if (D <= 0) throw std::domain_error("dimension must be positive");
  Int num;
  unsigned long mag = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(D), mag);
  return e >= 0 ? Rat(num) : Rat(1, num);
}

inline Int int_pow(long base, unsigned long e) {
  if (base < 0) throw std::domain_error("negative base");
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

// True when r is an integer that fits in long.
inline bool is_small_int(const Rat& r) {
  return r.get_den() == 1 && r.get_num().fits_slong_p();
}

}  // namespace qweight

#include "qweight/stabilizer.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qweight/errors.hpp"
#include "zp_linalg.hpp"

namespace qweight {

namespace {

using detail::Mat;
using detail::Row;

// (x|z) row of length 2n for one element.
Row to_row(const PauliElement& a) {
  Row r(2 * a.n());
  for (int i = 0; i < a.n(); ++i) {
    r[i] = a.x[i];
    r[a.n() + i] = a.z[i];
  }
  return r;
}

// Commutation constraint row: <a, v> = 0 for unknown v = (x|z) reads
// (-z_a | x_a) . v = 0.
Row constraint_row(const PauliElement& a) {
  Row r(2 * a.n());
  for (int i = 0; i < a.n(); ++i) {
    r[i] = static_cast<std::uint8_t>((a.p - a.z[i]) % a.p);
    r[a.n() + i] = a.x[i];
  }
  return r;
}

int form_rows(const Row& a, const Row& b, int n, int p) {
  long s = 0;
  for (int i = 0; i < n; ++i) s += long(a[i]) * b[n + i] - long(a[n + i]) * b[i];
  return static_cast<int>(((s % p) + p) % p);
}

PauliElement from_row(const Row& r, int n, int p) {
  std::vector<std::uint8_t> x(r.begin(), r.begin() + n), z(r.begin() + n, r.end());
  int phase = 0;
  if (p == 2) {
    long xz = 0;
    for (int i = 0; i < n; ++i) xz += long(x[i]) * z[i];
    phase = static_cast<int>(xz % 2);
  }
  return make_pauli(p, std::move(x), std::move(z), phase);
}

}  // namespace

Int StabilizerCode::dimension() const { return int_pow(p, k); }

StabilizerCode make_code(int p, int n, std::vector<PauliElement> stabilizers,
                         std::vector<PauliElement> logicals) {
  if (n < 1 || n > 32) throw std::domain_error("site count out of range");
  const int m = static_cast<int>(stabilizers.size());
  if (m > n) throw inconsistency_error("more generators than sites");
  for (const auto& g : stabilizers) {
    if (g.p != p || g.n() != n) throw inconsistency_error("generator shape mismatch");
    if (!pauli_order_divides_p(g)) throw inconsistency_error("generator order is not p");
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!pauli_commute(stabilizers[i], stabilizers[j]))
        throw inconsistency_error("generators do not commute");

  Mat sv;
  for (const auto& g : stabilizers) sv.push_back(to_row(g));
  if (detail::rank(sv, p) != m) throw inconsistency_error("generators are dependent");

  StabilizerCode code;
  code.p = p;
  code.n = n;
  code.k = n - m;
  code.stabilizers = std::move(stabilizers);

  if (!logicals.empty()) {
    if (static_cast<int>(logicals.size()) != 2 * code.k)
      throw inconsistency_error("expected 2k logical operators");
    for (const auto& g : logicals) {
      if (g.p != p || g.n() != n) throw inconsistency_error("logical shape mismatch");
      if (!pauli_order_divides_p(g)) throw inconsistency_error("logical order is not p");
      for (const auto& s : code.stabilizers)
        if (!pauli_commute(s, g))
          throw inconsistency_error("logical does not commute with the stabilizer");
    }
    for (int i = 0; i < code.k; ++i) {
      code.logical_x.push_back(logicals[2 * i]);
      code.logical_z.push_back(logicals[2 * i + 1]);
    }
    for (int i = 0; i < code.k; ++i)
      for (int j = 0; j < code.k; ++j) {
        if (symplectic_form(code.logical_x[i], code.logical_x[j]) != 0)
          throw inconsistency_error("logical X pair does not commute");
        if (symplectic_form(code.logical_z[i], code.logical_z[j]) != 0)
          throw inconsistency_error("logical Z pair does not commute");
        const int f = symplectic_form(code.logical_x[i], code.logical_z[j]);
        if (f != (i == j ? 1 : 0))
          throw inconsistency_error("logical pairing is not canonical");
      }
    Mat all = sv;
    for (const auto& g : logicals) all.push_back(to_row(g));
    if (detail::rank(all, p) != m + 2 * code.k)
      throw inconsistency_error("logicals are dependent on the stabilizer");
    return code;
  }

  if (code.k == 0) return code;

  // Symplectic orthocomplement of the generator span.
  Mat con;
  for (const auto& g : code.stabilizers) con.push_back(constraint_row(g));
  if (con.empty()) {
    con.push_back(Row(2 * n, 0));  // nullspace of the zero map is everything
  }
  Mat ortho = detail::nullspace(con, p);

  // Coset representatives of orthocomplement mod generator span.
  Mat red = sv;
  std::vector<int> red_piv = detail::rref(red, p);
  Mat quotient;
  for (auto& w : ortho) {
    Row v = w;
    detail::reduce_against(v, red, red_piv, p);
    if (detail::is_zero(v)) continue;
    int lead = 0;
    while (v[lead] == 0) ++lead;
    const int inv = detail::inv_mod(v[lead], p);
    for (auto& e : v) e = static_cast<std::uint8_t>(e * inv % p);
    quotient.push_back(v);
    red.push_back(v);
    red_piv.push_back(lead);
  }
  if (static_cast<int>(quotient.size()) != 2 * code.k)
    throw std::runtime_error("logical completion lost dimensions");

  // Symplectic Gram-Schmidt on the (nondegenerate) quotient.
  Mat stab_rref = sv;
  std::vector<int> stab_piv = detail::rref(stab_rref, p);
  std::vector<Row> pool(quotient.begin(), quotient.end());
  for (int pair = 0; pair < code.k; ++pair) {
    if (pool.empty()) throw std::runtime_error("logical completion exhausted the pool");
    Row u = pool.front();
    pool.erase(pool.begin());
    int partner = -1, f = 0;
    for (int j = 0; j < static_cast<int>(pool.size()); ++j) {
      f = form_rows(u, pool[j], n, p);
      if (f != 0) {
        partner = j;
        break;
      }
    }
    if (partner < 0) throw std::runtime_error("logical completion found a degenerate vector");
    Row v = pool[partner];
    pool.erase(pool.begin() + partner);
    const int inv = detail::inv_mod(f, p);
    for (auto& e : v) e = static_cast<std::uint8_t>(e * inv % p);

    std::vector<Row> next;
    for (auto& t : pool) {
      const int fv = form_rows(t, v, n, p);
      const int fu = form_rows(t, u, n, p);
      // t - <t,v> u + <t,u> v commutes with both members of the new pair.
      for (int j = 0; j < 2 * n; ++j) {
        long e = t[j] - long(fv) * u[j] + long(fu) * v[j];
        t[j] = static_cast<std::uint8_t>(((e % p) + p) % p);
      }
      detail::reduce_against(t, stab_rref, stab_piv, p);
      if (!detail::is_zero(t)) next.push_back(t);
    }
    pool = std::move(next);
    code.logical_x.push_back(from_row(u, n, p));
    code.logical_z.push_back(from_row(v, n, p));
  }
  return code;
}

namespace {

int parse_phase_token(const std::string& tok, int p, const std::string& where) {
  if (tok == "+" || tok == "+1") return 0;
  if (tok == "-" || tok == "-1") return p;
  if (tok == "i" || tok == "+i" || tok == "-i") {
    if (p != 2) throw parse_error(where + ": phase i needs dimension 2");
    return tok == "-i" ? 3 : 1;
  }
  auto tail_int = [&](std::size_t off) {
    std::size_t pos = 0;
    int c = 0;
    try {
      c = std::stoi(tok.substr(off), &pos);
    } catch (const std::exception&) {
      throw parse_error(where + ": bad phase token '" + tok + "'");
    }
    if (off + pos != tok.size()) throw parse_error(where + ": bad phase token '" + tok + "'");
    return c;
  };
  if (tok.rfind("w^", 0) == 0) return ((2 * tail_int(2)) % (2 * p) + 2 * p) % (2 * p);
  if (tok.rfind("t^", 0) == 0) return (tail_int(2) % (2 * p) + 2 * p) % (2 * p);
  throw parse_error(where + ": bad phase token '" + tok + "'");
}

// One site symbol: I, Y (p = 2), or X[a][Z[b]] / Z[b]. Returns tau exponent
// contributed beyond the x/z data (only Y = tau XZ does).
int parse_symbol(const std::string& tok, int p, std::uint8_t& x, std::uint8_t& z,
                 const std::string& where) {
  x = z = 0;
  if (tok == "I") return 0;
  if (tok == "Y") {
    if (p != 2) throw parse_error(where + ": symbol Y needs dimension 2");
    x = z = 1;
    return 1;
  }
  std::size_t i = 0;
  auto exponent = [&]() {
    std::size_t start = i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == start) return 1;
    const int e = std::stoi(tok.substr(start, i - start));
    if (e < 1 || e >= p) throw parse_error(where + ": exponent out of [1, p-1] in '" + tok + "'");
    return e;
  };
  if (i < tok.size() && tok[i] == 'X') {
    ++i;
    x = static_cast<std::uint8_t>(exponent());
  }
  if (i < tok.size() && tok[i] == 'Z') {
    ++i;
    z = static_cast<std::uint8_t>(exponent());
  }
  if (i != tok.size() || (x == 0 && z == 0))
    throw parse_error(where + ": bad site symbol '" + tok + "'");
  return 0;
}

}  // namespace

StabilizerCode parse_fixture(std::istream& in, const std::string& name) {
  int p = 0, n = 0, lineno = 0;
  std::vector<PauliElement> stabs, logicals;
  bool saw_generator = false;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = name + ":" + std::to_string(lineno);
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "dim") {
      if (p != 0) throw parse_error(where + ": duplicate dim");
      if (saw_generator) throw parse_error(where + ": dim after generators");
      if (!(ls >> p) || p < 2) throw parse_error(where + ": bad dim");
      std::string extra;
      if (ls >> extra) throw parse_error(where + ": trailing tokens after dim");
    } else if (kw == "sites") {
      if (n != 0) throw parse_error(where + ": duplicate sites");
      if (saw_generator) throw parse_error(where + ": sites after generators");
      if (!(ls >> n) || n < 1) throw parse_error(where + ": bad sites");
      std::string extra;
      if (ls >> extra) throw parse_error(where + ": trailing tokens after sites");
    } else if (kw == "stab" || kw == "logical") {
      if (p == 0 || n == 0) throw parse_error(where + ": dim and sites must come first");
      saw_generator = true;
      std::string tok;
      if (!(ls >> tok)) throw parse_error(where + ": missing phase token");
      int phase = parse_phase_token(tok, p, where);
      std::vector<std::uint8_t> x(n), z(n);
      for (int i = 0; i < n; ++i) {
        if (!(ls >> tok)) throw parse_error(where + ": expected " + std::to_string(n) + " sites");
        phase += parse_symbol(tok, p, x[i], z[i], where);
      }
      if (ls >> tok) throw parse_error(where + ": trailing tokens");
      PauliElement g;
      try {
        g = make_pauli(p, std::move(x), std::move(z), phase);
      } catch (const std::domain_error& e) {
        throw parse_error(where + ": " + e.what());
      }
      (kw == "stab" ? stabs : logicals).push_back(std::move(g));
    } else {
      throw parse_error(where + ": unknown directive '" + kw + "'");
    }
  }
  if (p == 0 || n == 0) throw parse_error(name + ": missing dim or sites");
  try {
    return make_code(p, n, std::move(stabs), std::move(logicals));
  } catch (const std::domain_error& e) {
    throw parse_error(name + ": " + e.what());
  }
}

StabilizerCode parse_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path + ": cannot open");
  return parse_fixture(in, path);
}

StabilizerCode random_pure_stabilizer(int p, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(0, p - 1);
  std::vector<PauliElement> gens;
  Mat red;
  std::vector<int> red_piv;
  while (static_cast<int>(gens.size()) < n) {
    Mat con;
    for (const auto& g : gens) con.push_back(constraint_row(g));
    if (con.empty()) con.push_back(Row(2 * n, 0));
    const Mat ortho = detail::nullspace(con, p);
    for (int attempt = 0;; ++attempt) {
      if (attempt > 1000) throw std::runtime_error("random state growth stalled");
      Row v(2 * n, 0);
      for (const auto& w : ortho) {
        const int c = coeff(rng);
        if (c == 0) continue;
        for (int j = 0; j < 2 * n; ++j)
          v[j] = static_cast<std::uint8_t>((v[j] + c * w[j]) % p);
      }
      Row r = v;
      detail::reduce_against(r, red, red_piv, p);
      if (detail::is_zero(r)) continue;
      int lead = 0;
      while (r[lead] == 0) ++lead;
      const int inv = detail::inv_mod(r[lead], p);
      for (auto& e : r) e = static_cast<std::uint8_t>(e * inv % p);
      red.push_back(r);
      red_piv.push_back(lead);
      gens.push_back(from_row(v, n, p));
      break;
    }
  }
  return make_code(p, n, std::move(gens));
}

}  // namespace qweight

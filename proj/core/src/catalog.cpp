#include "qweight/catalog.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "qweight/combinatorics.hpp"
#include "qweight/errors.hpp"

namespace qweight {

bool is_prime_power(int q) {
  if (q < 2) return false;
  int p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (p * p > q) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

namespace {

using Ctx = std::map<std::string, Int>;

// Recursive-descent evaluator for the little integer expression language.
class Eval {
 public:
  Eval(const std::string& src, const Ctx& ctx) : src_(src), ctx_(ctx) {}

  Int expression() {
    Int v = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return v;
  }

  bool predicate() {
    bool v = parse_conj();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error("expression '" + src_ + "': " + msg);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(const std::string& tok) {
    skip_ws();
    if (src_.compare(pos_, tok.size(), tok) != 0) return false;
    // identifiers must not run into a longer word
    if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
      const std::size_t end = pos_ + tok.size();
      if (end < src_.size() &&
          (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
        return false;
    }
    pos_ += tok.size();
    return true;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool parse_conj() {
    bool v = parse_rel();
    while (eat("&&")) v = parse_rel() && v;
    return v;
  }

  bool parse_rel() {
    if (eat("any")) return true;
    if (eat("two_power")) {
      auto it = ctx_.find("q");
      if (it == ctx_.end()) fail("two_power needs q");
      Int q = it->second;
      if (q < 2) return false;
      while (q % 2 == 0) q /= 2;
      return q == 1;
    }
    const Int lhs = parse_expr();
    std::string op;
    for (const char* c : {"<=", ">=", "==", "!=", "<", ">"})
      if (eat(c)) {
        op = c;
        break;
      }
    if (op.empty()) fail("expected comparison");
    const Int rhs = parse_expr();
    if (op == "<=") return lhs <= rhs;
    if (op == ">=") return lhs >= rhs;
    if (op == "==") return lhs == rhs;
    if (op == "!=") return lhs != rhs;
    if (op == "<") return lhs < rhs;
    return lhs > rhs;
  }

  Int parse_expr() {
    Int v = parse_term();
    for (;;) {
      if (eat("+"))
        v += parse_term();
      else if (eat("-"))
        v -= parse_term();
      else
        return v;
    }
  }

  Int parse_term() {
    Int v = parse_factor();
    for (;;) {
      if (eat("*"))
        v *= parse_factor();
      else if (eat("%")) {
        Int m = parse_factor();
        if (m <= 0) fail("modulus must be positive");
        Int r = v % m;
        if (r < 0) r += m;
        v = r;
      } else
        return v;
    }
  }

  Int parse_factor() {
    Int base = parse_atom();
    if (!eat("^")) return base;
    const Int e = parse_atom();
    if (e < 0 || !e.fits_ulong_p()) fail("bad exponent");
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e.get_ui());
    return out;
  }

  Int parse_atom() {
    skip_ws();
    if (eat("-")) return -parse_atom();
    if (eat("(")) {
      Int v = parse_expr();
      if (!eat(")")) fail("missing )");
      return v;
    }
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return Int(src_.substr(start, pos_ - start));
    }
    if (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      const std::string name = src_.substr(start, pos_ - start);
      if (eat("(")) {
        std::vector<Int> args;
        if (peek() != ')') {
          args.push_back(parse_expr());
          while (eat(",")) args.push_back(parse_expr());
        }
        if (!eat(")")) fail("missing )");
        return call(name, args);
      }
      auto it = ctx_.find(name);
      if (it == ctx_.end()) fail("unknown variable '" + name + "'");
      return it->second;
    }
    fail("expected a value");
  }

  Int call(const std::string& name, const std::vector<Int>& args) {
    auto need = [&](std::size_t n) {
      if (args.size() != n) fail(name + " takes " + std::to_string(n) + " arguments");
    };
    if (name == "binom") {
      need(2);
      if (!args[0].fits_slong_p() || !args[1].fits_slong_p()) fail("binom argument too large");
      return binomial(args[0].get_si(), args[1].get_si());
    }
    if (name == "min") {
      need(2);
      return args[0] < args[1] ? args[0] : args[1];
    }
    if (name == "max") {
      need(2);
      return args[0] > args[1] ? args[0] : args[1];
    }
    if (name == "fdiv" || name == "cdiv") {
      need(2);
      if (args[1] == 0) fail("division by zero");
      Int q;
      if (name == "fdiv")
        mpz_fdiv_q(q.get_mpz_t(), args[0].get_mpz_t(), args[1].get_mpz_t());
      else
        mpz_cdiv_q(q.get_mpz_t(), args[0].get_mpz_t(), args[1].get_mpz_t());
      return q;
    }
    fail("unknown function '" + name + "'");
  }

  const std::string& src_;
  const Ctx& ctx_;
  std::size_t pos_ = 0;
};

Int eval_expr(const std::string& src, const Ctx& ctx) { return Eval(src, ctx).expression(); }
bool eval_pred(const std::string& src, const Ctx& ctx) { return Eval(src, ctx).predicate(); }

constexpr long kMaxShiftSteps = 4096;

}  // namespace

Catalog Catalog::from_entries(std::vector<CatalogEntry> entries) {
  Catalog c;
  c.entries_ = std::move(entries);
  return c;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path + ": cannot open");
  std::vector<CatalogEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = path + ":" + std::to_string(lineno);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw parse_error(where + ": " + e.what());
    }
    try {
      CatalogEntry e;
      e.family = j.at("family").get<std::string>();
      const auto& params = j.at("params");
      if (!params.is_array() || params.size() != 3)
        throw parse_error("params must be an array of 3 expressions");
      for (int i = 0; i < 3; ++i) e.params[i] = params[i].get<std::string>();
      e.cite = j.at("cite").get<std::string>();
      if (j.contains("q")) e.q_constraint = j.at("q").get<std::string>();
      if (j.contains("d")) {
        const auto& d = j.at("d");
        if (!d.is_array() || d.size() != 2) throw parse_error("d must be an array of 2");
        e.d_lo = d[0].get<std::string>();
        e.d_hi = d[1].get<std::string>();
      }
      if (j.contains("s")) {
        const auto& s = j.at("s");
        if (!s.is_array() || s.size() != 2) throw parse_error("s must be an array of 2");
        e.s_lo = s[0].get<std::string>();
        e.s_hi = s[1].get<std::string>();
      }
      if (j.contains("constraint")) e.constraint = j.at("constraint").get<std::string>();
      entries.push_back(std::move(e));
    } catch (const parse_error& e) {
      throw parse_error(where + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
      throw parse_error(where + ": " + e.what());
    }
  }
  return from_entries(std::move(entries));
}

std::optional<CatalogHit> Catalog::find(int n, int k, int d, int D) const {
  if (!is_prime_power(D)) return std::nullopt;
  if (k < 0 || k != n - 2 * d + 2) return std::nullopt;
  const Ctx qctx{{"q", Int(D)}};
  for (const auto& e : entries_) {
    if (!eval_pred(e.q_constraint, qctx)) continue;
    Ctx ctx = qctx;
    ctx["d"] = d;
    const Int s_lo = eval_expr(e.s_lo, ctx);
    const Int s_hi = eval_expr(e.s_hi, ctx);
    if (s_hi < s_lo) continue;
    if (s_hi - s_lo > kMaxShiftSteps) throw parse_error("catalog shift range too wide");
    for (Int s = s_lo; s <= s_hi; ++s) {
      ctx["s"] = s;
      if (!e.d_lo.empty() &&
          !(eval_expr(e.d_lo, ctx) <= d && Int(d) <= eval_expr(e.d_hi, ctx)))
        continue;
      if (!e.constraint.empty() && !eval_pred(e.constraint, ctx)) continue;
      if (eval_expr(e.params[0], ctx) != n || eval_expr(e.params[1], ctx) != k ||
          eval_expr(e.params[2], ctx) != d)
        continue;
      CatalogHit hit;
      hit.params = CodeParams{n, Rat(k), d, D};
      hit.cite = e.cite;
      hit.family = e.family;
      return hit;
    }
  }
  return std::nullopt;
}

std::optional<CatalogHit> Catalog::lower(int N, int D) const {
  if (N < 4 || N % 2 != 0) throw std::domain_error("family sum must be even and at least 4");
  const int a = N / 2;
  for (int d = a + 1; d >= 2; --d) {
    const int n = a + d - 1, k = a - d + 1;
    if (auto hit = find(n, k, d, D)) return hit;
    if (k == 0 && d - 1 >= 2) {
      if (auto base = find(n - 1, 1, d - 1, D)) {
        CatalogHit hit;
        hit.params = CodeParams{n, Rat(0), d, D};
        hit.cite = base->cite;
        hit.family = base->family;
        hit.lifted = true;
        return hit;
      }
    }
  }
  return std::nullopt;
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("QWEIGHT_CATALOG")) return env;
#ifdef QWEIGHT_CATALOG_DEFAULT
  return QWEIGHT_CATALOG_DEFAULT;
#else
  throw std::runtime_error("no catalog path configured; set QWEIGHT_CATALOG");
#endif
}

}  // namespace qweight

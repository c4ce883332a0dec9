// Command line front end: closed-form weight lists, feasibility decisions,
// family tables, catalog lookups and stabilizer fixture oracles.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qweight/catalog.hpp"
#include "qweight/enumerators.hpp"
#include "qweight/errors.hpp"
#include "qweight/feasibility.hpp"
#include "qweight/oracle.hpp"
#include "qweight/stabilizer.hpp"

using json = nlohmann::ordered_json;
using namespace qweight;

namespace {

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw std::domain_error("--format expects table, csv or json, got '" + s + "'");
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// ((n,k,d)) without the alphabet suffix, for fixed-D tables.
std::string triple_to_string(const CodeParams& p) {
  return "((" + std::to_string(p.n) + "," + to_string(p.k) + "," + std::to_string(p.d) + "))";
}

json params_json(const CodeParams& p) {
  return json{{"n", p.n}, {"k", to_string(p.k)}, {"d", p.d}, {"D", p.D}};
}

json values_json(const WeightDistribution& w) {
  json a = json::array();
  for (const auto& v : w.values) a.push_back(to_string(v));
  return a;
}

std::string joined_values(const WeightDistribution& w) {
  std::string out;
  for (std::size_t j = 0; j < w.values.size(); ++j) {
    if (j) out += ',';
    out += to_string(w.values[j]);
  }
  return out;
}

json verdict_json(const FeasibilityVerdict& v) {
  json j{{"params", params_json(v.params)},
         {"status", status_name(v.status)},
         {"reason", reason_name(v.reason)}};
  if (v.witness)
    j["witness"] = json{{"index", v.witness->index}, {"value", to_string(v.witness->value)}};
  return j;
}

std::string witness_text(const FeasibilityVerdict& v) {
  if (!v.witness) return "";
  return "S_" + std::to_string(v.witness->index) + " = " + to_string(v.witness->value);
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != s.size()) throw std::domain_error("bad " + what + " '" + s + "'");
  return v;
}

// Explicit dimension K = D^k; anything that is not a plain power of D is refused.
Rat k_from_dimension(const std::string& kdim, int D) {
  Rat K;
  try {
    K = parse_rational(kdim);
  } catch (const std::invalid_argument& e) {
    throw std::domain_error(e.what());
  }
  if (K.get_den() != 1 || K < 1) throw std::domain_error("--K expects a positive integer");
  if (D < 2) throw std::domain_error("D must be at least 2");
  mpz_class rem = K.get_num();
  long k = 0;
  while (rem > 1) {
    if (rem % D != 0) throw std::domain_error("--K value " + kdim + " is not a power of D");
    rem /= D;
    ++k;
  }
  return Rat(k);
}

// d is determined by the Singleton-saturating pattern when omitted:
// floor((n - k)/2) + 1 covers both the k = n-2d+2 grid and the k=0 odd-n case.
int derived_distance(int n, const Rat& k) {
  if (k.get_den() != 1) throw std::domain_error("--d is required when k is not an integer");
  const long ki = k.get_num().get_si();
  if (ki < 0 || ki > n) throw std::domain_error("k must lie between 0 and n");
  return static_cast<int>((n - ki) / 2 + 1);
}

struct ParamArgs {
  int n = 0;
  std::string k;
  std::string kdim;
  int d = -1;
  int D = 0;
};

CodeParams resolve_params(const ParamArgs& a) {
  if (a.k.empty() == a.kdim.empty())
    throw std::domain_error("give exactly one of --k and --K");
  Rat k;
  if (!a.k.empty()) {
    try {
      k = parse_rational(a.k);
    } catch (const std::invalid_argument& e) {
      throw std::domain_error(e.what());
    }
  } else {
    k = k_from_dimension(a.kdim, a.D);
  }
  const int d = a.d >= 0 ? a.d : derived_distance(a.n, k);
  return CodeParams{a.n, k, d, a.D};
}

int cmd_weights(const CodeParams& p, const std::string& kind, Format fmt) {
  const WeightDistribution w = kind == "sl" ? qmds_sl(p) : qmds_unitary(p);
  if (fmt == Format::Json) {
    json out{{"params", params_json(p)}, {"kind", kind_name(w.kind)}, {"values", values_json(w)}};
    std::cout << out.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    std::cout << "weight,value\n";
    for (std::size_t j = 0; j < w.values.size(); ++j)
      std::cout << j << "," << to_string(w.values[j]) << "\n";
  } else {
    std::cout << joined_values(w) << "\n";
  }
  return 0;
}

int cmd_shadow(const CodeParams& p, Format fmt) {
  const WeightDistribution s = shadow(qmds_unitary(p));
  int neg = -1;
  for (int j = 0; j <= s.n && neg < 0; ++j)
    if (s.values[j] < 0) neg = j;
  if (fmt == Format::Json) {
    json out{{"params", params_json(p)}, {"shadow", values_json(s)}};
    out["negative_index"] = neg < 0 ? json(nullptr) : json(neg);
    std::cout << out.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    std::cout << "weight,value\n";
    for (int j = 0; j <= s.n; ++j) std::cout << j << "," << to_string(s.values[j]) << "\n";
  } else {
    std::cout << joined_values(s) << "\n";
    if (neg >= 0)
      std::cout << "negative: S_" << neg << " = " << to_string(s.values[neg]) << "\n";
  }
  return neg >= 0 ? 1 : 0;
}

int cmd_check(const CodeParams& p, Format fmt) {
  const FeasibilityVerdict v = layered_check(p);
  if (fmt == Format::Json) {
    std::cout << verdict_json(v).dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    std::cout << "n,k,d,D,status,reason,witness_index,witness_value\n";
    std::cout << p.n << "," << to_string(p.k) << "," << p.d << "," << p.D << ","
              << status_name(v.status) << "," << reason_name(v.reason) << ",";
    if (v.witness)
      std::cout << v.witness->index << "," << to_string(v.witness->value);
    else
      std::cout << ",";
    std::cout << "\n";
  } else {
    std::cout << "params: " << params_to_string(v.params) << "\n";
    std::cout << "status: " << status_name(v.status) << "\n";
    if (v.status == FeasStatus::Excluded) std::cout << "reason: " << reason_name(v.reason) << "\n";
    if (v.witness) std::cout << "witness: " << witness_text(v) << "\n";
  }
  return v.status == FeasStatus::Excluded ? 1 : 0;
}

int cmd_family(int N, int D, Format fmt) {
  const FamilyScan scan = family_scan(N, D);
  if (fmt == Format::Json) {
    json chain = json::array();
    for (const auto& v : scan.chain) chain.push_back(verdict_json(v));
    json out{{"N", N}, {"D", D}, {"chain", chain}, {"upper", verdict_json(scan.upper)}};
    std::cout << out.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    std::cout << "d,n,k,status,reason,witness_index,witness_value\n";
    for (const auto& v : scan.chain) {
      std::cout << v.params.d << "," << v.params.n << "," << to_string(v.params.k) << ","
                << status_name(v.status) << "," << reason_name(v.reason) << ",";
      if (v.witness)
        std::cout << v.witness->index << "," << to_string(v.witness->value);
      else
        std::cout << ",";
      std::cout << "\n";
    }
  } else {
    std::cout << "family: n + k = " << N << ", D = " << D << "\n";
    for (const auto& v : scan.chain) {
      std::cout << "  " << params_to_string(v.params) << " " << status_name(v.status);
      if (v.status == FeasStatus::Excluded) std::cout << " (" << reason_name(v.reason) << ")";
      if (v.witness) std::cout << " " << witness_text(v) << "\n";
      else std::cout << "\n";
    }
    std::cout << "upper: " << params_to_string(scan.upper.params);
    if (scan.upper.status == FeasStatus::Trivial) std::cout << " (trivial)";
    std::cout << "\n";
  }
  return 0;
}

int cmd_table(int D, int maxN, const std::string& catalog_path, Format fmt) {
  std::optional<Catalog> cat;
  if (!catalog_path.empty()) cat = Catalog::load(catalog_path);
  const std::vector<TableRow> rows = make_table(D, maxN, cat ? &*cat : nullptr);
  if (fmt == Format::Json) {
    json jrows = json::array();
    for (const auto& r : rows) {
      json jr{{"N", r.N}, {"upper", verdict_json(r.upper)}};
      if (r.lower) {
        jr["lower"] = json{{"params", params_json(r.lower->params)},
                           {"cite", r.lower->cite},
                           {"family", r.lower->family},
                           {"lifted", r.lower->lifted}};
      } else {
        jr["lower"] = nullptr;
      }
      jr["optimal"] = r.optimal;
      jrows.push_back(std::move(jr));
    }
    std::cout << json{{"D", D}, {"rows", jrows}}.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    std::cout << "N,n_up,k_up,d_up,status,n_lo,k_lo,d_lo,cite,optimal\n";
    for (const auto& r : rows) {
      std::cout << r.N << "," << r.upper.params.n << "," << to_string(r.upper.params.k) << ","
                << r.upper.params.d << "," << status_name(r.upper.status) << ",";
      if (r.lower)
        std::cout << r.lower->params.n << "," << to_string(r.lower->params.k) << ","
                  << r.lower->params.d << "," << csv_quote(r.lower->cite) << ",";
      else
        std::cout << ",,," << csv_quote("") << ",";
      std::cout << (r.optimal ? 1 : 0) << "\n";
    }
  } else {
    std::printf("%4s  %-14s  %-14s  %-28s  %s\n", "N", "upper", "lower", "cite", "optimal");
    for (const auto& r : rows) {
      const std::string up = triple_to_string(r.upper.params) +
                             (r.upper.status == FeasStatus::Trivial ? " *" : "");
      const std::string lo = r.lower ? triple_to_string(r.lower->params) : "-";
      const std::string cite = r.lower ? r.lower->cite : "-";
      std::printf("%4d  %-14s  %-14s  %-28s  %s\n", r.N, up.c_str(), lo.c_str(), cite.c_str(),
                  r.optimal ? "yes" : "no");
    }
  }
  return 0;
}

int cmd_catalog(int N, int D, const std::string& catalog_path, Format fmt) {
  const Catalog cat = Catalog::load(catalog_path);
  const std::optional<CatalogHit> hit = cat.lower(N, D);
  if (fmt == Format::Json) {
    json out{{"N", N}, {"D", D}};
    if (hit)
      out["hit"] = json{{"params", params_json(hit->params)},
                        {"cite", hit->cite},
                        {"family", hit->family},
                        {"lifted", hit->lifted}};
    else
      out["hit"] = nullptr;
    std::cout << out.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    std::cout << "N,D,n,k,d,cite,lifted\n";
    std::cout << N << "," << D << ",";
    if (hit)
      std::cout << hit->params.n << "," << to_string(hit->params.k) << "," << hit->params.d << ","
                << csv_quote(hit->cite) << "," << (hit->lifted ? 1 : 0);
    else
      std::cout << ",,," << csv_quote("") << ",";
    std::cout << "\n";
  } else if (hit) {
    std::cout << "best known: " << params_to_string(hit->params) << " [" << hit->cite << "]"
              << (hit->lifted ? " via purification" : "") << "\n";
  } else {
    std::cout << "no catalog member for n + k = " << N << ", D = " << D << "\n";
  }
  return 0;
}

int cmd_oracle(const std::string& path, const std::vector<int>& reduce, bool do_purify,
               Format fmt) {
  StabilizerCode code = parse_fixture_file(path);
  if (do_purify) code = purify(code);
  WeightPair pair;
  if (reduce.empty())
    pair = group_sl_weights(code);
  else
    pair = reduced_weights(code, reduce);
  // A_0/B_0 recovers tr of the (possibly reduced) projector-like operator.
  const Rat rank_ratio = pair.primary.values[0] / pair.dual.values[0];
  const CodeCheckResult chk = code_check(pair.primary, pair.dual, rank_ratio);

  if (fmt == Format::Json) {
    json out{{"file", path},
             {"p", code.p},
             {"n", code.n},
             {"k", code.k},
             {"purified", do_purify},
             {"traced", json(reduce)},
             {"K", to_string(rank_ratio)},
             {"distance", chk.distance},
             {"pure", chk.pure},
             {"sl-primary", values_json(pair.primary)},
             {"sl-dual", values_json(pair.dual)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (fmt == Format::Csv) {
    std::cout << "kind,weight,value\n";
    for (std::size_t j = 0; j < pair.primary.values.size(); ++j)
      std::cout << "sl-primary," << j << "," << to_string(pair.primary.values[j]) << "\n";
    for (std::size_t j = 0; j < pair.dual.values.size(); ++j)
      std::cout << "sl-dual," << j << "," << to_string(pair.dual.values[j]) << "\n";
    return 0;
  }
  std::cout << "code: p = " << code.p << ", n = " << code.n << ", k = " << code.k << "\n";
  if (!reduce.empty()) {
    std::cout << "traced:";
    for (int s : reduce) std::cout << " " << s;
    std::cout << "\n";
  }
  std::cout << "K: " << to_string(rank_ratio) << "\n";
  std::cout << "distance: " << chk.distance << (chk.pure ? " (pure)" : "") << "\n";
  std::cout << "sl-primary:";
  for (const auto& v : pair.primary.values) std::cout << " " << to_string(v);
  std::cout << "\n";
  std::cout << "sl-dual:";
  for (const auto& v : pair.dual.values) std::cout << " " << to_string(v);
  std::cout << "\n";
  return 0;
}

std::vector<int> parse_site_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_int(item, "site list entry"));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weight enumerators and feasibility bounds for stabilizer codes"};
  app.set_version_flag("--version", QWEIGHT_VERSION);
  app.require_subcommand(1);

  std::string format = "table";
  app.add_option("--format", format, "Output format: table, csv or json")
      ->capture_default_str();

  ParamArgs pa;
  std::string kind = "sl";
  int N = 0, D = 0, maxN = -1;
  std::string file, catalog_path, reduce_list;
  std::vector<std::string> slots;
  bool do_purify = false;

  auto add_params = [&](CLI::App* cmd) {
    cmd->fallthrough();
    cmd->add_option("--n", pa.n, "Number of sites")->required();
    cmd->add_option("--k", pa.k, "Log-dimension, rational like 3 or 1/2");
    cmd->add_option("--K", pa.kdim, "Explicit dimension, must be a power of D");
    cmd->add_option("--d", pa.d, "Distance (default: the Singleton-saturating value)");
    cmd->add_option("--D", pa.D, "Local alphabet size")->required();
  };

  CLI::App* weights = app.add_subcommand(
      "weights", "Closed-form enumerator of a Singleton-saturating parameter set");
  add_params(weights);
  weights->add_option("--kind", kind, "Which distribution: sl or unitary")
      ->capture_default_str()
      ->check(CLI::IsMember({"sl", "unitary"}));

  CLI::App* shadow_cmd =
      app.add_subcommand("shadow", "Shadow coefficients; exit 1 when one is negative");
  add_params(shadow_cmd);

  CLI::App* check =
      app.add_subcommand("check", "Layered feasibility decision; exit 1 when excluded");
  check->fallthrough();
  check->add_option("params", slots, "n k d D (or n d D with --K)")->expected(-1);
  check->add_option("--K", pa.kdim, "Explicit dimension, must be a power of D");

  CLI::App* family = app.add_subcommand(
      "family", "Verdicts for every member of the family n + k = N");
  family->fallthrough();
  family->add_option("N", N, "Family sum n + k (even)")->required();
  family->add_option("D", D, "Local alphabet size")->required();

  CLI::App* table = app.add_subcommand(
      "table", "Upper and lower bounds for all families up to a maximal sum");
  table->fallthrough();
  table->add_option("--D", D, "Local alphabet size")->required();
  table->add_option("--max", maxN, "Largest family sum (default 2(D^2-1))");
  table->add_option("--catalog", catalog_path, "Catalog path (empty to skip the lower column)");

  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "Best known family member from the catalog");
  catalog_cmd->fallthrough();
  catalog_cmd->add_option("N", N, "Family sum n + k (even)")->required();
  catalog_cmd->add_option("D", D, "Local alphabet size")->required();
  catalog_cmd->add_option("--catalog", catalog_path, "Catalog path");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Exact weights of a stabilizer fixture by group enumeration");
  oracle->fallthrough();
  oracle->add_option("file", file, "Fixture path")->required()->check(CLI::ExistingFile);
  oracle->add_option("--reduce", reduce_list, "Comma-separated sites to trace out");
  oracle->add_flag("--purify", do_purify, "Append reference sites before the census");

  bool catalog_opt_seen = false;
  try {
    app.parse(argc, argv);
    catalog_opt_seen = table->count("--catalog") > 0 || catalog_cmd->count("--catalog") > 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format fmt = parse_format(format);
    if (weights->parsed()) return cmd_weights(resolve_params(pa), kind, fmt);
    if (shadow_cmd->parsed()) return cmd_shadow(resolve_params(pa), fmt);
    if (check->parsed()) {
      if (pa.kdim.empty()) {
        if (slots.size() != 4) throw std::domain_error("check expects n k d D");
        pa.k = slots[1];
        pa.d = parse_int(slots[2], "d");
        pa.D = parse_int(slots[3], "D");
      } else {
        if (slots.size() != 3) throw std::domain_error("check with --K expects n d D");
        pa.d = parse_int(slots[1], "d");
        pa.D = parse_int(slots[2], "D");
      }
      pa.n = parse_int(slots[0], "n");
      return cmd_check(resolve_params(pa), fmt);
    }
    if (family->parsed()) return cmd_family(N, D, fmt);
    if (table->parsed()) {
      if (maxN < 0) maxN = 2 * (D * D - 1);
      if (!catalog_opt_seen) catalog_path = default_catalog_path();
      return cmd_table(D, maxN, catalog_path, fmt);
    }
    if (catalog_cmd->parsed()) {
      if (!catalog_opt_seen) catalog_path = default_catalog_path();
      return cmd_catalog(N, D, catalog_path, fmt);
    }
    if (oracle->parsed()) return cmd_oracle(file, parse_site_list(reduce_list), do_purify, fmt);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const inconsistency_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

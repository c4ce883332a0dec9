#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qweight/catalog.hpp"
#include "qweight/errors.hpp"
#include "qweight/feasibility.hpp"
#include "frozen_tables.hpp"
#include "helpers.hpp"

using namespace qweight;
using testutil::lower_rows;
using testutil::optimal_sums;
using testutil::upper_rows;

namespace {

CodeParams cp(int n, long k, int d, int D) { return CodeParams{n, Rat(k), d, D}; }

Catalog shipped_catalog() { return Catalog::load(QWEIGHT_CATALOG_PATH); }

}  // namespace

TEST_CASE("dimension bound on the distance") {
  CHECK(singleton_ok(cp(5, 1, 3, 2)));
  CHECK(singleton_ok(cp(6, 2, 3, 2)));
  CHECK_FALSE(singleton_ok(cp(4, 4, 3, 2)));
  CHECK_FALSE(singleton_ok(cp(5, 2, 3, 2)));
  CHECK(singleton_ok(CodeParams{5, Rat(1, 2), 3, 2}));  // fractional log-dimension
}

TEST_CASE("length cap for saturating parameters") {
  CHECK_FALSE(length_bound_ok(cp(6, 2, 3, 2)));
  CHECK(length_bound_ok(cp(5, 1, 3, 2)));
  CHECK(length_bound_ok(cp(10, 0, 6, 3)));
  CHECK(length_bound_ok(cp(12, 0, 7, 3)));   // inside the cap, dies by shadow instead
  CHECK_FALSE(length_bound_ok(cp(16, 2, 8, 3)));
  CHECK_FALSE(length_bound_ok(cp(7, 1, 4, 2)));
  CHECK_THROWS_AS(length_bound_ok(cp(4, 2, 2, 2)), std::domain_error);   // d < 3
  CHECK_THROWS_AS(length_bound_ok(cp(7, 1, 3, 2)), std::domain_error);   // not saturating
  CHECK_THROWS_AS(length_bound_ok(cp(7, 0, 4, 2)), std::domain_error);   // odd-n pure form
}

TEST_CASE("first negative shadow coefficient") {
  const auto w1 = shadow_witness(cp(4, 0, 3, 2));
  REQUIRE(w1.has_value());
  CHECK(w1->index == 0);
  CHECK(w1->value == Rat(-1, 2));

  const auto w2 = shadow_witness(cp(9, 3, 4, 3));
  REQUIRE(w2.has_value());
  CHECK(w2->index == 0);
  CHECK(w2->value == Rat(-24));

  CHECK_FALSE(shadow_witness(cp(5, 1, 3, 2)).has_value());
  CHECK_FALSE(shadow_witness(cp(7, 0, 4, 2)).has_value());
}

TEST_CASE("layered decision ladder") {
  auto v = layered_check(cp(6, 2, 3, 2));
  CHECK(v.status == FeasStatus::Excluded);
  CHECK(v.reason == FeasReason::LengthBound);
  CHECK_FALSE(v.witness.has_value());

  v = layered_check(cp(4, 0, 3, 2));
  CHECK(v.status == FeasStatus::Excluded);
  CHECK(v.reason == FeasReason::Shadow);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->index == 0);
  CHECK(v.witness->value == Rat(-1, 2));

  v = layered_check(cp(5, 1, 3, 2));
  CHECK(v.status == FeasStatus::NotExcluded);
  CHECK(v.reason == FeasReason::None);

  v = layered_check(cp(4, 4, 3, 2));
  CHECK(v.status == FeasStatus::Excluded);
  CHECK(v.reason == FeasReason::Singleton);

  v = layered_check(cp(4, 2, 2, 2));
  CHECK(v.status == FeasStatus::Trivial);

  // Odd-length pure-state form passes through the shadow layer.
  v = layered_check(cp(7, 0, 4, 2));
  CHECK(v.status == FeasStatus::NotExcluded);

  CHECK_THROWS_AS(layered_check(cp(7, 1, 3, 2)), std::domain_error);
  CHECK_THROWS_AS(layered_check(cp(0, 0, 1, 2)), std::domain_error);
  CHECK_THROWS_AS(layered_check(cp(4, 0, 6, 2)), std::domain_error);
  CHECK_THROWS_AS(layered_check(cp(4, 0, 3, 1)), std::domain_error);
}

TEST_CASE("qubit distance caps") {
  CHECK(qubit_max_distance(4, true) == 2);
  CHECK(qubit_max_distance(5, true) == 3);
  CHECK(qubit_max_distance(6, true) == 4);
  CHECK(qubit_max_distance(7, true) == 4);
  CHECK(qubit_max_distance(11, true) == 5);
  CHECK(qubit_max_distance(12, true) == 6);

  CHECK(qubit_max_distance(4, false) == 2);
  CHECK(qubit_max_distance(5, false) == 3);
  CHECK(qubit_max_distance(7, false) == 3);
  CHECK(qubit_max_distance(10, false) == 4);
  CHECK(qubit_max_distance(16, false) == 6);
  CHECK(qubit_max_distance(17, false) == 7);
  CHECK_THROWS_AS(qubit_max_distance(0, true), std::domain_error);
}

TEST_CASE("length caps for maximal entanglement") {
  CHECK_FALSE(scott_ame_check(8, 2));
  CHECK(scott_ame_check(6, 2));
  CHECK(scott_ame_check(11, 2));
  CHECK_FALSE(scott_ame_check(13, 2));
  CHECK(scott_ame_check(16, 3));
  CHECK_FALSE(scott_ame_check(18, 3));
  CHECK_THROWS_AS(scott_ame_check(1, 2), std::domain_error);
}

TEST_CASE("family scans match the closed-form exclusions") {
  const auto s6 = family_scan(6, 2);
  REQUIRE(s6.chain.size() == 2);
  CHECK(s6.chain[0].status == FeasStatus::NotExcluded);
  CHECK(s6.chain[1].status == FeasStatus::NotExcluded);
  CHECK(s6.upper.params == cp(6, 0, 4, 2));

  const auto s12 = family_scan(12, 3);
  REQUIRE(s12.chain.size() == 5);
  const std::vector<Rat> expected_witness = {Rat(-160, 243), Rat(-80, 27), Rat(-32, 3),
                                             Rat(-24)};
  for (int i = 0; i < 4; ++i) {
    CHECK(s12.chain[i].status == FeasStatus::Excluded);
    CHECK(s12.chain[i].reason == FeasReason::Shadow);
    REQUIRE(s12.chain[i].witness.has_value());
    CHECK(s12.chain[i].witness->index == 0);
    CHECK(s12.chain[i].witness->value == expected_witness[i]);
  }
  CHECK(s12.chain[4].status == FeasStatus::NotExcluded);
  CHECK(s12.upper.params == cp(8, 4, 3, 3));

  const auto s16 = family_scan(16, 4);
  CHECK(s16.upper.params == cp(13, 3, 6, 4));
  REQUIRE(s16.chain[0].witness.has_value());
  CHECK(s16.chain[0].witness->value == Rat(-3357, 32768));
  REQUIRE(s16.chain[1].witness.has_value());
  CHECK(s16.chain[1].witness->value == Rat(-3357, 4096));
  REQUIRE(s16.chain[2].witness.has_value());
  CHECK(s16.chain[2].witness->value == Rat(-621, 256));

  const auto s28 = family_scan(28, 5);
  CHECK(s28.upper.params == cp(26, 2, 13, 5));
  REQUIRE(s28.chain[0].witness.has_value());
  CHECK(s28.chain[0].witness->value == Rat(-29248, 48828125));
  REQUIRE(s28.chain[1].witness.has_value());
  CHECK(s28.chain[1].witness->value == Rat(-14624, 1953125));

  CHECK_THROWS_AS(family_scan(5, 2), std::domain_error);
  CHECK_THROWS_AS(family_scan(2, 2), std::domain_error);
}

TEST_CASE("qubit families break down to the trivial member beyond sum 6") {
  for (int N = 8; N <= 40; N += 2) {
    const auto scan = family_scan(N, 2);
    CHECK(scan.upper.status == FeasStatus::Trivial);
    CHECK(scan.upper.params.d == 2);
    CHECK(scan.upper.params == cp(N / 2 + 1, N / 2 - 1, 2, 2));
  }
}

TEST_CASE("family scans never beat the qubit distance caps") {
  for (int N = 4; N <= 40; N += 2) {
    const auto scan = family_scan(N, 2);
    for (const auto& v : scan.chain) {
      if (v.status == FeasStatus::Excluded) continue;
      const bool rank_one = v.params.k == 0;
      REQUIRE(v.params.d <= qubit_max_distance(v.params.n, rank_one));
    }
  }
}

TEST_CASE("exclusions are upward closed in the distance") {
  for (int D = 2; D <= 5; ++D) {
    const int cap = 2 * (D * D - 1) + 4;
    for (int N = 4; N <= cap; N += 2) {
      const auto scan = family_scan(N, D);
      bool seen_alive = false;  // chain runs from largest d down
      for (const auto& v : scan.chain) {
        if (v.status != FeasStatus::Excluded)
          seen_alive = true;
        else
          REQUIRE_FALSE(seen_alive);
      }
    }
  }
}

TEST_CASE("bound tables reproduce the frozen rows") {
  const auto cat = shipped_catalog();
  for (int D = 3; D <= 5; ++D) {
    const auto& up = upper_rows(D);
    const auto& lo = lower_rows(D);
    const auto rows = make_table(D, up.back().N, &cat);
    REQUIRE(rows.size() == up.size());
    const auto opt = optimal_sums(D);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      REQUIRE(row.N == up[i].N);
      REQUIRE_MESSAGE(row.upper.params == cp(up[i].n, up[i].k, up[i].d, D),
                      "upper mismatch at D=" << D << " N=" << row.N << ": got "
                                             << params_to_string(row.upper.params));
      REQUIRE(row.lower.has_value());
      REQUIRE_MESSAGE(row.lower->params == cp(lo[i].n, lo[i].k, lo[i].d, D),
                      "lower mismatch at D=" << D << " N=" << row.N);
      REQUIRE(row.lower->cite == lo[i].cite);
      const bool should_be_optimal =
          std::find(opt.begin(), opt.end(), row.N) != opt.end();
      REQUIRE(row.optimal == should_be_optimal);
    }
  }
}

TEST_CASE("catalog lookup precedence and membership") {
  const auto cat = shipped_catalog();
  CHECK(cat.entries().size() == 26);

  auto hit = cat.find(5, 1, 3, 2);
  REQUIRE(hit.has_value());
  CHECK(hit->cite == "Rains");  // listed before the single-error family
  CHECK_FALSE(hit->lifted);

  hit = cat.find(4, 0, 3, 3);
  REQUIRE(hit.has_value());
  CHECK(hit->cite == "Hermitean");
  CHECK(hit->family == "ame4");

  hit = cat.find(9, 3, 4, 4);
  REQUIRE(hit.has_value());
  CHECK(hit->cite == "Grassl-Roetteler");

  hit = cat.find(10, 0, 6, 3);
  REQUIRE(hit.has_value());
  CHECK(hit->cite == "Glynn");

  hit = cat.find(10, 0, 6, 4);
  REQUIRE(hit.has_value());
  CHECK(hit->cite == "Gulliver");

  hit = cat.find(8, 0, 5, 5);
  REQUIRE(hit.has_value());
  CHECK(hit->cite == "Kim-Lee");

  hit = cat.find(26, 18, 5, 5);
  REQUIRE(hit.has_value());
  CHECK(hit->cite == "Grassl-Roetteler I");

  // The four-site d=2 code is claimed by the shortened Hermitean family
  // before the catch-all trivial family sees it.
  hit = cat.find(4, 2, 2, 2);
  REQUIRE(hit.has_value());
  CHECK(hit->cite == "Hermitean");

  hit = cat.find(6, 4, 2, 2);
  REQUIRE(hit.has_value());
  CHECK(hit->cite == "trivial");

  CHECK_FALSE(cat.find(6, 2, 3, 2).has_value());   // no known [[6,2,3]] qubit code
  CHECK_FALSE(cat.find(4, 0, 3, 6).has_value());   // composite non-prime-power alphabet
  CHECK_FALSE(cat.find(5, 2, 3, 2).has_value());   // off the saturating grid
  CHECK_FALSE(cat.find(5, -1, 4, 2).has_value());
}

TEST_CASE("catalog family bests match the frozen lower rows") {
  const auto cat = shipped_catalog();
  for (int D = 3; D <= 5; ++D) {
    for (const auto& ref : lower_rows(D)) {
      const auto hit = cat.lower(ref.N, D);
      REQUIRE_MESSAGE(hit.has_value(), "no lower at D=" << D << " N=" << ref.N);
      REQUIRE_MESSAGE(hit->params == cp(ref.n, ref.k, ref.d, D),
                      "lower mismatch at D=" << D << " N=" << ref.N << ": got "
                                             << params_to_string(hit->params));
      REQUIRE(hit->cite == ref.cite);
    }
  }
}

TEST_CASE("pure-state rows lift from known one-dimensional codes") {
  CatalogEntry rains;
  rains.family = "rains";
  rains.q_constraint = "any";
  rains.params = {"5", "1", "3"};
  rains.cite = "Rains";
  const auto cat = Catalog::from_entries({rains});

  const auto hit = cat.lower(6, 2);
  REQUIRE(hit.has_value());
  CHECK(hit->params == cp(6, 0, 4, 2));
  CHECK(hit->lifted);
  CHECK(hit->cite == "Rains");

  CHECK_FALSE(cat.lower(8, 2).has_value());
}

TEST_CASE("catalog expression errors surface as parse failures") {
  CatalogEntry bad;
  bad.family = "broken";
  bad.params = {"q +", "0", "3"};
  bad.cite = "x";
  const auto cat = Catalog::from_entries({bad});
  CHECK_THROWS_AS(cat.find(4, 0, 3, 2), parse_error);

  CHECK_THROWS_AS(Catalog::load("/nonexistent/catalog.jsonl"), parse_error);
}

TEST_CASE("environment variable overrides the catalog path") {
  setenv("QWEIGHT_CATALOG", "/tmp/qweight-test-catalog.jsonl", 1);
  CHECK(default_catalog_path() == "/tmp/qweight-test-catalog.jsonl");
  unsetenv("QWEIGHT_CATALOG");
}

TEST_CASE("prime power recognition") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32, 49})
    CHECK_MESSAGE(is_prime_power(q), "q = " << q);
  for (int q : {-4, 0, 1, 6, 10, 12, 14, 15, 18, 20, 100})
    CHECK_MESSAGE(!is_prime_power(q), "q = " << q);
}

TEST_CASE("verdict labels") {
  CHECK(status_name(FeasStatus::NotExcluded) == "not-excluded");
  CHECK(status_name(FeasStatus::Excluded) == "excluded");
  CHECK(status_name(FeasStatus::Trivial) == "trivial");
  CHECK(reason_name(FeasReason::None) == "none");
  CHECK(reason_name(FeasReason::Singleton) == "singleton");
  CHECK(reason_name(FeasReason::LengthBound) == "length");
  CHECK(reason_name(FeasReason::Shadow) == "shadow");
  CHECK(reason_name(FeasReason::Pairing) == "pairing");
  CHECK(reason_name(FeasReason::Propagation) == "propagation");
}

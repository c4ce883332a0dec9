#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "helpers.hpp"

using testutil::run_cli;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string fixture_arg(const std::string& name) {
  return std::string(QWEIGHT_FIXTURE_DIR) + "/" + name;
}

std::string golden(const std::string& name) {
  return slurp(std::string(QWEIGHT_GOLDEN_DIR) + "/" + name);
}

// Writes a throwaway fixture and returns its path.
std::string temp_fixture(const std::string& tag, const std::string& body) {
  const std::string path = "/tmp/qweight_cli_" + tag + ".stab";
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("closed-form weights print as one comma-separated line") {
  const auto r = run_cli("weights --n 6 --k 0 --D 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1,0,0,0,45,0,18\n");

  const auto u = run_cli("weights --n 6 --k 0 --D 2 --kind unitary");
  CHECK(u.exit_code == 0);
  CHECK(u.out == "1,3,15/4,5/2,15/4,3,1\n");

  const auto q = run_cli("weights --n 4 --k 0 --D 3");
  CHECK(q.exit_code == 0);
  CHECK(q.out == "1,0,0,32,48\n");
}

TEST_CASE("weights runs are deterministic") {
  const auto a = run_cli("weights --n 10 --k 2 --D 3 --format json");
  const auto b = run_cli("weights --n 10 --k 2 --D 3 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"kind\": \"sl\"") != std::string::npos);
}

TEST_CASE("explicit dimension replaces the log-dimension flag") {
  const auto r = run_cli("weights --n 5 --K 2 --D 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "4,0,0,0,60,0\n");

  const auto bad = run_cli("weights --n 5 --K 3 --D 2");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("not a power of D") != std::string::npos);

  const auto both = run_cli("weights --n 5 --k 1 --K 2 --D 2");
  CHECK(both.exit_code == 2);

  const auto off_grid = run_cli("weights --n 7 --k 2 --D 2");
  CHECK(off_grid.exit_code == 2);
}

TEST_CASE("shadow prints coefficients and flags the first negative one") {
  const auto neg = run_cli("shadow --n 4 --k 0 --D 2");
  CHECK(neg.exit_code == 1);
  CHECK(neg.out == "-1/2,0,9,0,15/2\nnegative: S_0 = -1/2\n");

  const auto ok = run_cli("shadow --n 5 --k 1 --D 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "2,0,0,60,30,36\n");
}

TEST_CASE("layered check reports the verdict and exit code") {
  const auto excl = run_cli("check 9 3 4 3 --format json");
  CHECK(excl.exit_code == 1);
  CHECK(excl.out ==
        "{\n"
        "  \"params\": {\n"
        "    \"n\": 9,\n"
        "    \"k\": \"3\",\n"
        "    \"d\": 4,\n"
        "    \"D\": 3\n"
        "  },\n"
        "  \"status\": \"excluded\",\n"
        "  \"reason\": \"shadow\",\n"
        "  \"witness\": {\n"
        "    \"index\": 0,\n"
        "    \"value\": \"-24\"\n"
        "  }\n"
        "}\n");

  const auto ok = run_cli("check 5 1 3 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "params: ((5,1,3))_2\nstatus: not-excluded\n");

  const auto trivial = run_cli("check 4 2 2 2");
  CHECK(trivial.exit_code == 0);
  CHECK(trivial.out == "params: ((4,2,2))_2\nstatus: trivial\n");

  const auto len = run_cli("check 6 2 3 2");
  CHECK(len.exit_code == 1);
  CHECK(len.out.find("reason: length") != std::string::npos);

  const auto singleton = run_cli("check 5 3 2 --K 8");
  CHECK(singleton.exit_code == 1);
  CHECK(singleton.out.find("reason: singleton") != std::string::npos);

  const auto usage = run_cli("check 5 1 3");
  CHECK(usage.exit_code == 2);
}

TEST_CASE("family scan lists each member") {
  const auto r = run_cli("family 6 2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "d,n,k,status,reason,witness_index,witness_value\n"
        "4,6,0,not-excluded,none,,\n"
        "3,5,1,not-excluded,none,,\n");

  const auto t = run_cli("family 12 3 --format csv");
  CHECK(t.exit_code == 0);
  CHECK(t.out ==
        "d,n,k,status,reason,witness_index,witness_value\n"
        "7,12,0,excluded,shadow,0,-160/243\n"
        "6,11,1,excluded,shadow,0,-80/27\n"
        "5,10,2,excluded,shadow,0,-32/3\n"
        "4,9,3,excluded,shadow,0,-24\n"
        "3,8,4,not-excluded,none,,\n");

  CHECK(run_cli("family 7 2").exit_code == 2);
  CHECK(run_cli("family 2 2").exit_code == 2);
}

TEST_CASE("bound tables match the golden CSV files") {
  for (int D = 3; D <= 5; ++D) {
    const auto r = run_cli("table --D " + std::to_string(D) + " --format csv");
    CHECK(r.exit_code == 0);
    CHECK_MESSAGE(r.out == golden("table_D" + std::to_string(D) + ".csv"),
                  "table bytes changed for D = " << D);
  }

  const auto no_lower = run_cli("table --D 3 --max 4 --catalog \"\" --format csv");
  CHECK(no_lower.exit_code == 0);
  CHECK(no_lower.out ==
        "N,n_up,k_up,d_up,status,n_lo,k_lo,d_lo,cite,optimal\n"
        "4,4,0,3,not-excluded,,,,\"\",0\n");
}

TEST_CASE("catalog lookup prints the best known member") {
  const auto hit = run_cli("catalog 14 4");
  CHECK(hit.exit_code == 0);
  CHECK(hit.out == "best known: ((10,4,4))_4 [shortening [[18,12,4]]_4]\n");

  const auto miss = run_cli("catalog 8 2");
  CHECK(miss.exit_code == 0);
  CHECK(miss.out == "no catalog member for n + k = 8, D = 2\n");
}

TEST_CASE("stabilizer oracle output") {
  const auto csv = run_cli("oracle " + fixture_arg("ghz3.stab") + " --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out ==
        "kind,weight,value\n"
        "sl-primary,0,1\n"
        "sl-primary,1,0\n"
        "sl-primary,2,3\n"
        "sl-primary,3,4\n"
        "sl-dual,0,1\n"
        "sl-dual,1,0\n"
        "sl-dual,2,3\n"
        "sl-dual,3,4\n");

  const auto purified = run_cli("oracle " + fixture_arg("five_qubit_513.stab") + " --purify");
  CHECK(purified.exit_code == 0);
  CHECK(purified.out ==
        "code: p = 2, n = 6, k = 0\n"
        "K: 1\n"
        "distance: 4 (pure)\n"
        "sl-primary: 1 0 0 0 45 0 18\n"
        "sl-dual: 1 0 0 0 45 0 18\n");

  const auto reduced = run_cli("oracle " + fixture_arg("shor_913.stab") + " --reduce 8");
  CHECK(reduced.exit_code == 0);
  CHECK(reduced.out ==
        "code: p = 2, n = 9, k = 1\n"
        "traced: 8\n"
        "K: 4\n"
        "distance: 1 (pure)\n"
        "sl-primary: 16 0 112 0 240 0 400 0 256\n"
        "sl-dual: 4 8 80 152 520 568 1136 808 820\n");
}

TEST_CASE("oracle failure modes") {
  const auto missing = run_cli("oracle /nonexistent/code.stab");
  CHECK(missing.exit_code == 2);  // rejected as a usage error before parsing

  const auto malformed = temp_fixture("malformed", "dim 2\nstab + X\n");
  const auto bad = run_cli("oracle " + malformed);
  CHECK(bad.exit_code == 3);
  CHECK(bad.out.find("sites") != std::string::npos);
  std::remove(malformed.c_str());

  std::ostringstream big;  // 2^25 group elements blows the enumeration budget
  big << "dim 2\nsites 25\n";
  for (int g = 0; g < 25; ++g) {
    big << "stab +";
    for (int i = 0; i < 25; ++i) big << (i == g ? " Z" : " I");
    big << "\n";
  }
  const auto huge = temp_fixture("huge", big.str());
  // the full census spans 2^25 group elements, past the enumeration budget;
  // reducing a site first would shrink the span to 2^24 and succeed instead
  const auto budget = run_cli("oracle " + huge);
  CHECK(budget.exit_code == 3);
  CHECK(budget.out.find("2^24") != std::string::npos);
  std::remove(huge.c_str());

  const auto bad_site = run_cli("oracle " + fixture_arg("ghz3.stab") + " --reduce 7");
  CHECK(bad_site.exit_code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("bogus").exit_code == 2);
  CHECK(run_cli("weights --n 6 --D 2").exit_code == 2);       // no dimension given
  CHECK(run_cli("weights --n 6 --k 0").exit_code == 2);       // missing alphabet
  CHECK(run_cli("check 9 3 4 3 --format yaml").exit_code == 2);
  CHECK(run_cli("table --max 8").exit_code == 2);
}

TEST_CASE("version flag") {
  const auto r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0.1.0\n");
}

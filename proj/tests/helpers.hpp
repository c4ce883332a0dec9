#pragma once

#include <array>
#include <cstdio>
#include <initializer_list>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qweight/enumerators.hpp"
#include "qweight/rational.hpp"
#include "qweight/stabilizer.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
  return std::string(QWEIGHT_FIXTURE_DIR) + "/" + name;
}

inline qweight::StabilizerCode load_fixture(const std::string& name) {
  return qweight::parse_fixture_file(fixture_path(name));
}

// Every shipped fixture, smallest first.
inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "ghz3.stab",       "c422.stab",         "ame43_qutrit.stab",
      "five_qubit_513.stab", "hexacode_604.stab", "shor_913.stab",
  };
  return names;
}

inline std::vector<qweight::Rat> rats(std::initializer_list<long> xs) {
  std::vector<qweight::Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Comma or space separated list of rational literals.
inline std::vector<qweight::Rat> rats(const std::string& csv) {
  std::vector<qweight::Rat> out;
  std::string item;
  std::stringstream ss(csv);
  while (std::getline(ss, item, ',')) out.push_back(qweight::parse_rational(item));
  return out;
}

struct CliResult {
  int exit_code = -1;
  std::string out;  // stdout and stderr interleaved
};

// Runs the installed CLI with the given argument string through a shell.
inline CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QWEIGHT_CLI_PATH) + " " + args + " 2>&1";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace testutil

#pragma once

#include <stdexcept>
#include <string>

namespace qweight {

// Input data contradicts itself (enumerator pair violating K*B_j >= A_j,
// dense rounding residual too large, invalid generator sets).
struct inconsistency_error : std::runtime_error {
  explicit inconsistency_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed fixture or catalog text; message carries the line number.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Requested computation exceeds the enumeration/materialization limits.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qweight

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gnkb {

struct CheckRow {
  std::string instance;  ///< e.g. "n=8 k=2 b=5" or "beta=9/20 k=3"
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckRow> rows;

  bool passed() const;
  int failures() const;
};

struct VerifyOptions {
  int random = 500;         ///< random instances for prop1 and meta
  std::uint64_t seed = 7;
};

/// thm1a, spo, lex-pin, distance, geometry-identities, riemann, thm2,
/// prop1, transform, meta.
const std::vector<std::string>& suite_names();

/// Runs one suite by name; "all" is handled by callers. ArgumentError for unknown names.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options = {});

}  // namespace gnkb

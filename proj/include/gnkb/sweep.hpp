#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnkb/numbering.hpp"
#include "gnkb/rational.hpp"

namespace gnkb {

/// Rows are the product k x (beta x n, then the explicit (n, b) pairs) x method,
/// in that nesting order.
struct SweepConfig {
  std::vector<int> k;
  std::vector<Rational> beta;
  std::vector<int> n;
  std::vector<std::pair<int, int>> nb;  ///< explicit (n, b)
  std::vector<Method> method;
  std::string output;  ///< empty: standard output
  int threads = 0;     ///< 0: hardware concurrency

  /// ParameterError when a beta * n is not an integer or a list is empty.
  void validate() const;
};

/// key = value lines; values are comma- or space-separated lists.
/// Keys: k, beta, n, nb (as n:b), method, output, threads. '#' starts a comment.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig parse_sweep_config_string(const std::string& text);

struct SweepRow {
  int n = 0, k = 0, b = 0;
  Method method = Method::lex;
  std::optional<std::int64_t> bandwidth;
  std::vector<std::string> fields;  ///< CSV cells in header order
};

const std::vector<std::string>& sweep_header();

/// Evaluates every row; failures land in the error column.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace gnkb

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gnkb/hypergraph.hpp"
#include "gnkb/numbering.hpp"

namespace gnkb {

struct BandwidthResult {
  std::int64_t width = 0;
  /// order[t] is the vertex at position t + 1.
  std::vector<int> order;
  /// labels[v] is the position of v, in 1..m.
  std::vector<std::uint32_t> labels;
};

/// Bandwidth of a numbering given as labels[v] in 1..m.
std::int64_t graph_bandwidth(const SimpleGraph& g, const std::vector<std::uint32_t>& labels);

/// Exact bandwidth with a witness numbering, by left-to-right placement.
/// Each candidate width is decided by depth-first search with deadline
/// pruning and a memo of failed (placed set, recent positions) states.
/// CapacityError above `cap` vertices.
BandwidthResult exact_bandwidth(const SimpleGraph& g, int cap = 24);

struct Certificate {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  Numbering witness;  ///< numbering achieving `upper`
  bool exact = false;  ///< lower == upper
  std::optional<std::int64_t> solver_value;  ///< exact bandwidth when the solver ran
};

/// Lower bound from the Chvatal and central bounds, upper bound from every
/// applicable construction, and the exact solver when |V| <= solver_cap
/// (solver_cap = 0 disables it).
Certificate certify(const Params& p, int solver_cap = 24);

}  // namespace gnkb

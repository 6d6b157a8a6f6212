#include "gnkb/numbering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gnkb/errors.hpp"

namespace gnkb {

std::string to_string(Method m) {
  switch (m) {
    case Method::lex: return "lex";
    case Method::spo: return "spo";
    case Method::case_a: return "case_a";
    case Method::case_b: return "case_b";
    case Method::custom: return "custom";
  }
  return "custom";
}

Method parse_method(const std::string& name) {
  if (name == "lex") return Method::lex;
  if (name == "spo") return Method::spo;
  if (name == "case_a" || name == "case-a") return Method::case_a;
  if (name == "case_b" || name == "case-b") return Method::case_b;
  throw ParameterError("unknown numbering method '" + name + "'");
}

Numbering::Numbering(const Params& p, std::shared_ptr<const std::vector<Vertex>> vertices,
                     std::vector<std::uint32_t> labels, Method method)
    : params_(p), vertices_(std::move(vertices)), labels_(std::move(labels)), method_(method) {
  if (labels_.size() != vertices_->size())
    throw NumberingError("numbering has " + std::to_string(labels_.size()) + " labels for " +
                         std::to_string(vertices_->size()) + " vertices");
  std::vector<char> seen(labels_.size() + 1, 0);
  for (auto l : labels_) {
    if (l < 1 || l > labels_.size()) throw NumberingError("label " + std::to_string(l) + " out of range");
    if (seen[l]) throw NumberingError("label " + std::to_string(l) + " used twice");
    seen[l] = 1;
  }
}

Numbering Numbering::from_order(const Params& p, std::shared_ptr<const std::vector<Vertex>> vertices,
                                const std::vector<std::uint32_t>& order, Method method) {
  if (order.size() != vertices->size()) throw NumberingError("order does not list every vertex");
  std::vector<std::uint32_t> labels(order.size(), 0);
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (order[t] >= labels.size()) throw NumberingError("order refers to a missing vertex");
    if (labels[order[t]] != 0) throw NumberingError("order lists a vertex twice");
    labels[order[t]] = static_cast<std::uint32_t>(t + 1);
  }
  return Numbering(p, std::move(vertices), std::move(labels), method);
}

Numbering Numbering::from_labels(const Params& p, std::shared_ptr<const std::vector<Vertex>> vertices,
                                 std::vector<std::uint32_t> labels, Method method) {
  return Numbering(p, std::move(vertices), std::move(labels), method);
}

std::uint32_t Numbering::label_of(const Vertex& v) const {
  auto it = std::lower_bound(vertices_->begin(), vertices_->end(), v);
  if (it == vertices_->end() || !(*it == v)) throw ArgumentError("tuple is not a vertex of this graph");
  return labels_[static_cast<std::size_t>(it - vertices_->begin())];
}

std::vector<std::uint32_t> Numbering::order() const {
  std::vector<std::uint32_t> out(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i] - 1] = static_cast<std::uint32_t>(i);
  return out;
}

std::int64_t bandwidth_of_numbering(const Numbering& f) {
  const Params& p = f.params();
  const auto& vertices = f.vertices();
  if (vertices.size() <= 1) return 0;

  if (p.k == 1) {
    // vertices are {0}, ..., {n} in order; i ~ j iff |i - j| <= b
    std::int64_t best = 0;
    for (int i = 0; i <= p.n; ++i)
      for (int j = i + 1; j <= std::min(p.n, i + p.b); ++j)
        best = std::max<std::int64_t>(best, std::abs(static_cast<std::int64_t>(f.label_at(static_cast<std::size_t>(i))) -
                                                     f.label_at(static_cast<std::size_t>(j))));
    return best;
  }

  const int w = p.n + 1;
  const auto cells = static_cast<std::size_t>(w) * static_cast<std::size_t>(w);
  if (cells > 200'000'000ull) throw CapacityError("(n+1)^2 grid too large for bandwidth evaluation");
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  // per-cell extreme labels, then quadrant aggregates over lo' >= lo, hi' <= hi
  std::vector<std::uint32_t> cell_min(cells, kNone), cell_max(cells, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto c = static_cast<std::size_t>(vertices[i].lo()) * w + static_cast<std::size_t>(vertices[i].hi());
    cell_min[c] = std::min(cell_min[c], f.label_at(i));
    cell_max[c] = std::max(cell_max[c], f.label_at(i));
  }
  std::vector<std::uint32_t> agg_min(cell_min), agg_max(cell_max);
  for (int lo = p.n; lo >= 0; --lo)
    for (int hi = 0; hi <= p.n; ++hi) {
      auto c = static_cast<std::size_t>(lo) * w + static_cast<std::size_t>(hi);
      if (lo < p.n) {
        agg_min[c] = std::min(agg_min[c], agg_min[c + w]);
        agg_max[c] = std::max(agg_max[c], agg_max[c + w]);
      }
      if (hi > 0) {
        agg_min[c] = std::min(agg_min[c], agg_min[c - 1]);
        agg_max[c] = std::max(agg_max[c], agg_max[c - 1]);
      }
    }

  std::int64_t best = 0;
  for (int lo = 0; lo <= p.n; ++lo)
    for (int hi = lo; hi <= std::min(p.n, lo + p.b); ++hi) {
      auto c = static_cast<std::size_t>(lo) * w + static_cast<std::size_t>(hi);
      if (cell_min[c] == kNone) continue;
      auto q = static_cast<std::size_t>(std::max(0, hi - p.b)) * w + static_cast<std::size_t>(std::min(p.n, lo + p.b));
      best = std::max<std::int64_t>(best, static_cast<std::int64_t>(agg_max[q]) - cell_min[c]);
      best = std::max<std::int64_t>(best, static_cast<std::int64_t>(cell_max[c]) - agg_min[q]);
    }
  return best;
}

std::int64_t brute_force_bandwidth(const Numbering& f, std::int64_t max_edges) {
  std::int64_t best = 0;
  for (auto [u, v] : edge_list(f.params(), max_edges)) {
    std::int64_t d = static_cast<std::int64_t>(f.label_at(static_cast<std::size_t>(u))) -
                     f.label_at(static_cast<std::size_t>(v));
    best = std::max(best, d < 0 ? -d : d);
  }
  return best;
}

Numbering lex_numbering(const Params& p) {
  auto vertices = std::make_shared<const std::vector<Vertex>>(enumerate_vertices(p));
  std::vector<std::uint32_t> order(vertices->size());
  std::iota(order.begin(), order.end(), 0u);
  return Numbering::from_order(p, std::move(vertices), order, Method::lex);
}

SpoPartition spo_partition(const Params& p, const std::vector<Vertex>& vertices) {
  SpoPartition part;
  bool next_to_r0 = true;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& x = vertices[i];
    auto idx = static_cast<std::uint32_t>(i);
    if (is_central(x, p)) {
      part.central.push_back(idx);
      continue;
    }
    int s = x.lo() + x.hi();
    if (s < p.n) {
      part.r0.push_back(idx);
    } else if (s > p.n) {
      part.r1.push_back(idx);
    } else {
      // R'' alternates in lexicographic order, starting with R0
      (next_to_r0 ? part.boundary_to_r0 : part.boundary_to_r1).push_back(idx);
      (next_to_r0 ? part.r0 : part.r1).push_back(idx);
      next_to_r0 = !next_to_r0;
    }
  }
  // lexicographic on the tuples read from the largest element down
  auto by_reversed = [&](std::uint32_t a, std::uint32_t b) {
    const auto& x = vertices[a].elements();
    const auto& y = vertices[b].elements();
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  };
  std::sort(part.r1.begin(), part.r1.end(), by_reversed);
  return part;
}

Numbering spo_numbering(const Params& p) {
  auto vertices = std::make_shared<const std::vector<Vertex>>(enumerate_vertices(p));
  auto part = spo_partition(p, *vertices);
  std::vector<std::uint32_t> order;
  order.reserve(vertices->size());
  order.insert(order.end(), part.r0.begin(), part.r0.end());
  order.insert(order.end(), part.central.begin(), part.central.end());
  order.insert(order.end(), part.r1.begin(), part.r1.end());
  return Numbering::from_order(p, std::move(vertices), order, Method::spo);
}

Numbering make_numbering(const Params& p, Method m) {
  switch (m) {
    case Method::lex: return lex_numbering(p);
    case Method::spo: return spo_numbering(p);
    case Method::case_a: return case_a_numbering(p);
    case Method::case_b: return case_b_numbering(p);
    case Method::custom: break;
  }
  throw ParameterError("custom numberings cannot be constructed by name");
}

}  // namespace gnkb

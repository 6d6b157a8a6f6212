#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gnkb {

/// Exact binomial coefficient; zero when `top < bottom`, `top < 0` or `bottom < 0`.
/// Throws CapacityError on 64-bit overflow.
std::int64_t binomial(std::int64_t top, std::int64_t bottom);

/// ceil(num / den) for den > 0 and any sign of num.
std::int64_t ceil_div(std::int64_t num, std::int64_t den);

/// The instance G_{n,k,b}: k-subsets of [0, n] with span at most b.
struct Params {
  int n = 0;
  int k = 1;
  int b = 1;

  /// Throws ParameterError unless k >= 1 and max(1, k-1) <= b <= n.
  void validate() const;

  friend bool operator==(const Params&, const Params&) = default;
};

/// A strictly increasing tuple of integers in [0, n].
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<int> elements);
  Vertex(std::initializer_list<int> elements);

  const std::vector<int>& elements() const noexcept { return elements_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  int lo() const { return elements_.front(); }
  int hi() const { return elements_.back(); }
  int span() const { return hi() - lo(); }

  /// Elements in descending order, compared lexicographically as a tuple.
  std::vector<int> reversed() const;
  /// (n - i_k, ..., n - i_1), sorted ascending again.
  Vertex complement(int n) const;

  /// Throws ArgumentError unless this is a k-tuple over [0, n].
  void check_shape(const Params& p) const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex& a, const Vertex& b) { return a.elements_ <=> b.elements_; }

 private:
  std::vector<int> elements_;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept;
};

/// All vertices sharing the same (min, max) pair.
struct SpanClass {
  int lo = 0;
  int hi = 0;
  std::int64_t size = 0;

  friend bool operator==(const SpanClass&, const SpanClass&) = default;
};

/// Vertices of G_{n,k,b} in lexicographic order of their tuples.
std::vector<Vertex> enumerate_vertices(const Params& p);

/// Both closed forms of |V|, checked against each other.
std::int64_t vertex_count_formula(const Params& p);
std::int64_t vertex_count_by_partition(const Params& p);
std::int64_t vertex_count_by_shift(const Params& p);

bool is_vertex(const Vertex& x, const Params& p);

/// Throws ArgumentError for x == y.
bool are_adjacent(const Vertex& x, const Vertex& y, const Params& p);

/// Adjacency of two (min, max) pairs; also true for the same pair.
inline bool classes_adjacent(int lo1, int hi1, int lo2, int hi2, int b) {
  int top = hi1 > hi2 ? hi1 : hi2;
  int bottom = lo1 < lo2 ? lo1 : lo2;
  return top - bottom <= b;
}

/// |C| = C(2b - n + 1, k): vertices adjacent to every other vertex.
std::int64_t central_count(const Params& p);
bool is_central(const Vertex& x, const Params& p);

/// Distance between intervals [i, i+k-1] and [j, j+k-1].
std::int64_t interval_distance(int i, int j, const Params& p);

/// Requires x.lo < y.lo, or x.lo == y.lo and x.hi < y.hi.
std::int64_t distance_upper_bound(const Vertex& x, const Vertex& y, const Params& p);

/// Breadth-first search on the vertex graph, adjacency evaluated on the fly.
/// Throws RegimeError when y is unreachable from x.
std::int64_t graph_distance_bfs(const Vertex& x, const Vertex& y, const Params& p);

std::int64_t diameter(const Params& p);

/// One class per feasible (lo, hi); requires k >= 2.
std::vector<SpanClass> span_classes(const Params& p);

/// Number of edges of G_{n,k,b}, computed from class sizes.
std::int64_t edge_count(const Params& p);

/// Explicit edge list over lexicographic vertex indices.
/// Throws CapacityError when the graph has more than `max_edges` edges.
std::vector<std::pair<std::int32_t, std::int32_t>> edge_list(const Params& p,
                                                            std::int64_t max_edges = 100000);

/// Shortest-path distances on the quotient graph of span classes.
///
/// Every class is a clique and two classes are joined exactly when their
/// (min, max) pairs are adjacent, so the distance between distinct vertices
/// equals the distance of their classes, or 1 when they share a class.
/// Works for k >= 1 (for k = 1 every class is a single vertex).
class ClassDistances {
 public:
  explicit ClassDistances(const Params& p);

  std::int64_t class_count() const noexcept { return static_cast<std::int64_t>(lo_.size()); }
  int index_of(int lo, int hi) const;

  /// -1 when unreachable.
  std::vector<int> from(int lo, int hi) const;

  /// Distance between vertices (distinct or equal).
  int vertex_distance(const std::vector<int>& row_from_x_class, const Vertex& x, const Vertex& y) const;

  /// Largest finite distance between any two vertices; -1 if disconnected.
  int eccentricity_max() const;

  const Params& params() const noexcept { return params_; }

 private:
  Params params_;
  std::vector<int> lo_, hi_;
  std::vector<std::int64_t> size_;
  std::vector<std::vector<int>> neighbours_;
  std::vector<int> grid_;
};

}  // namespace gnkb

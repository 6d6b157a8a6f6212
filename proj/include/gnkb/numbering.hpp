#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gnkb/bounds.hpp"
#include "gnkb/core_graph.hpp"

namespace gnkb {

enum class Method { lex, spo, case_a, case_b, custom };

std::string to_string(Method m);
/// Accepts "lex", "spo", "case_a", "case_b" (and "case-a", "case-b").
Method parse_method(const std::string& name);

/// A bijection from the vertices of G_{n,k,b} onto 1..|V|.
///
/// Vertices are held in lexicographic order; labels are indexed by that
/// position. Immutable once built.
class Numbering {
 public:
  /// `order[t]` is the lexicographic index of the vertex labelled t + 1.
  static Numbering from_order(const Params& p, std::shared_ptr<const std::vector<Vertex>> vertices,
                              const std::vector<std::uint32_t>& order, Method method);

  /// `labels[i]` is the label of the i-th vertex in lexicographic order.
  static Numbering from_labels(const Params& p, std::shared_ptr<const std::vector<Vertex>> vertices,
                               std::vector<std::uint32_t> labels, Method method = Method::custom);

  const Params& params() const noexcept { return params_; }
  Method method() const noexcept { return method_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return *vertices_; }
  std::shared_ptr<const std::vector<Vertex>> shared_vertices() const noexcept { return vertices_; }
  const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }

  std::uint32_t label_at(std::size_t lex_index) const { return labels_.at(lex_index); }
  /// Throws ArgumentError for a tuple that is not a vertex.
  std::uint32_t label_of(const Vertex& v) const;
  /// Lexicographic indices sorted by label.
  std::vector<std::uint32_t> order() const;

 private:
  Numbering(const Params& p, std::shared_ptr<const std::vector<Vertex>> vertices,
            std::vector<std::uint32_t> labels, Method method);

  Params params_;
  std::shared_ptr<const std::vector<Vertex>> vertices_;
  std::vector<std::uint32_t> labels_;
  Method method_;
};

/// Maximum label difference over all edges, from span-class aggregates.
std::int64_t bandwidth_of_numbering(const Numbering& f);

/// Same value by scanning an explicit edge list; CapacityError above `max_edges`.
std::int64_t brute_force_bandwidth(const Numbering& f, std::int64_t max_edges = 200000);

Numbering lex_numbering(const Params& p);

/// Blocks of the simple palindrome ordering, as lexicographic indices.
struct SpoPartition {
  std::vector<std::uint32_t> r0;
  std::vector<std::uint32_t> central;
  std::vector<std::uint32_t> r1;
  std::vector<std::uint32_t> boundary_to_r0;  ///< members of R'' placed in R0
  std::vector<std::uint32_t> boundary_to_r1;  ///< members of R'' placed in R1
};

SpoPartition spo_partition(const Params& p, const std::vector<Vertex>& vertices);

/// R0 (lex) + C (lex) + R1 (lex on reversed tuples).
Numbering spo_numbering(const Params& p);

/// Block-wise orderings of the band region for beta = b/n <= 1/2.
///
/// Points are (lo, hi) scaled by n. Each block is a closed polygon minus
/// the boundary segments handed to the next block. Inside a block vertices
/// are sorted by a projection parameter of their point, then by hi - lo,
/// then lexicographically:
///   - strips between parallels (case A quadrangles, lower halves of the
///     case B hexagons) project along the strip direction,
///   - fans around a centre (case A quadrangles around A_i, case B
///     triangles around A_i, upper halves of the hexagons around I) project
///     along the ray from the centre.
/// Along a fan ray the projection is the angle and hi - lo ascending is
/// radius descending, which is the reflected polar order.
class PolygonOrdering {
 public:
  explicit PolygonOrdering(const Params& p);

  const BetaDecomposition& decomposition() const noexcept { return dec_; }
  BetaCase which() const noexcept { return dec_.which; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::string& block_name(int block) const { return blocks_.at(static_cast<std::size_t>(block)).name; }

  /// Ordinal position of the block owning the point (lo, hi).
  /// Throws std::logic_error if no block claims it.
  int block_of(int lo, int hi) const;

  struct Key {
    int block = 0;
    std::int64_t num = 0;  ///< projection parameter num / den, den > 0
    std::int64_t den = 1;
    std::int64_t spread = 0;  ///< hi - lo
  };

  Key key(int lo, int hi) const;

  /// Three-way comparison of keys: negative, zero or positive.
  static int compare(const Key& a, const Key& b);

  /// Strict total order on vertices.
  bool less(const Vertex& x, const Vertex& y) const;

 private:
  struct IPoint {
    std::int64_t x, y;
  };
  struct Block {
    std::string name;
    std::vector<IPoint> polygon;
    std::vector<std::pair<IPoint, IPoint>> deleted;
    enum class Kind { strip, fan_diagonal, hexagon } kind;
    long index;  ///< i of the block's crucial points
  };

  bool owns(const Block& block, IPoint p) const;

  Params params_;
  BetaDecomposition dec_;
  std::int64_t scale_;  // q (q + 1)
  std::int64_t rem_;    // n - q b  (r scaled by n)
  std::int64_t h_;      // q (b - rem): offset of the A-line scaled by n
  std::vector<Block> blocks_;
};

Numbering case_a_numbering(const Params& p);
Numbering case_b_numbering(const Params& p);

/// Dispatch by method tag; throws for Method::custom.
Numbering make_numbering(const Params& p, Method m);

}  // namespace gnkb

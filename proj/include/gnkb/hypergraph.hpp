#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gnkb/core_graph.hpp"

namespace gnkb {

/// Undirected graph on 0..m-1 without self-loops, as a dense adjacency matrix.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int vertex_count);

  int vertex_count() const noexcept { return m_; }
  std::int64_t edge_count() const noexcept { return edges_; }

  /// Ignores repeated edges; throws ArgumentError on loops or out-of-range ends.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  /// Pairs (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  SimpleGraph complement() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.m_ == b.m_ && a.adj_ == b.adj_;
  }

 private:
  void check(int v) const;

  int m_ = 0;
  std::int64_t edges_ = 0;
  std::vector<char> adj_;
};

/// G_{n,k,b} as an explicit graph, vertices in lexicographic order.
SimpleGraph explicit_graph(const Params& p, std::int64_t max_edges = 2'000'000);

/// Vertices 0..m-1 and a list of distinct edges, each a sorted set of size >= 2.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Sorts every edge and drops repeated edges, keeping first occurrences.
  /// Throws ArgumentError for out-of-range vertices, repeated vertices in an
  /// edge, or edges with fewer than two vertices.
  Hypergraph(int vertex_count, std::vector<std::vector<int>> edges);

  int vertex_count() const noexcept { return m_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<std::vector<int>>& edges() const noexcept { return edges_; }
  const std::vector<int>& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

 private:
  int m_ = 0;
  std::vector<std::vector<int>> edges_;
};

SimpleGraph two_section(const Hypergraph& h);

bool is_weak_clique(const Hypergraph& h, const std::vector<int>& vertices);

/// One vertex per edge of H; e ~ e' iff e u e' is a weak clique. A weak
/// clique containing both edges contains their union, and subsets of weak
/// cliques are weak cliques, so the union test is exact.
SimpleGraph weak_edge_clique_graph(const Hypergraph& h);

/// Maximal cliques as bitmasks, by Bron-Kerbosch with pivoting.
/// CapacityError above 64 vertices.
std::vector<std::uint64_t> maximal_cliques(const SimpleGraph& g);

/// Minimum number of cliques covering the vertices. CapacityError above `cap` vertices.
int vertex_clique_cover_number(const SimpleGraph& g, int cap = 40);

/// Chromatic number by exact backtracking colouring; CapacityError above `cap` vertices.
int chromatic_number(const SimpleGraph& g, int cap = 40);

/// Minimum number of weak cliques whose members contain every edge.
/// CapacityError above `cap` edges or 64 vertices.
int weak_edge_clique_cover_number(const Hypergraph& h, int cap = 40);

struct Proposition1Values {
  int edge_cover = 0;    ///< weak edge clique covering number of H
  int vertex_cover = 0;  ///< vertex clique covering number of the weak edge clique graph
  bool equal() const noexcept { return edge_cover == vertex_cover; }
};

Proposition1Values proposition1_values(const Hypergraph& h);
bool check_proposition1(const Hypergraph& h);

/// All k-subsets of [0, n] with span <= b, in lexicographic order, on vertices 0..n.
/// Requires k >= 2.
Hypergraph maximal_banded_hypergraph(const Params& p);

/// max |f(u) - f(v)| over pairs inside a common edge; `labels[v]` is the
/// label of vertex v, a bijection onto 1..m (NumberingError otherwise).
std::int64_t hypergraph_numbering_bandwidth(const Hypergraph& h, const std::vector<std::uint32_t>& labels);

/// Every hypergraph on m vertices (m = 0..max_vertices) whose edges have sizes
/// in [min_size, max_size], one per edge subset.
std::vector<Hypergraph> all_small_hypergraphs(int max_vertices, int min_size, int max_size);

/// Uniform random hypergraph: `edge_count` distinct edges, sizes uniform in
/// [min_size, max_size]. Throws ArgumentError if not enough distinct edges exist.
Hypergraph random_hypergraph(int vertex_count, int edge_count, int min_size, int max_size,
                             std::mt19937_64& rng);

/// Uniform integer in [lo, hi] from the engine's raw output, identical on every
/// standard library (unlike std::uniform_int_distribution).
int uniform_int(std::mt19937_64& rng, int lo, int hi);

/// Text format: first line m, then one edge per line as vertex indices.
/// Blank lines and lines starting with '#' are skipped. ParseError carries the line.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph_string(const std::string& text);
std::string format_hypergraph(const Hypergraph& h);

}  // namespace gnkb

#include "gnkb/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

#include "gnkb/errors.hpp"

namespace gnkb {

SimpleGraph::SimpleGraph(int vertex_count) : m_(vertex_count) {
  if (vertex_count < 0) throw ArgumentError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0);
}

void SimpleGraph::check(int v) const {
  if (v < 0 || v >= m_) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
}

void SimpleGraph::add_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
  auto& a = adj_[static_cast<std::size_t>(u) * m_ + v];
  if (a) return;
  a = 1;
  adj_[static_cast<std::size_t>(v) * m_ + u] = 1;
  ++edges_;
}

bool SimpleGraph::has_edge(int u, int v) const {
  check(u);
  check(v);
  return adj_[static_cast<std::size_t>(u) * m_ + v] != 0;
}

int SimpleGraph::degree(int v) const {
  check(v);
  auto row = adj_.begin() + static_cast<std::ptrdiff_t>(v) * m_;
  return static_cast<int>(std::count(row, row + m_, 1));
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  check(v);
  std::vector<int> out;
  for (int u = 0; u < m_; ++u)
    if (adj_[static_cast<std::size_t>(v) * m_ + u]) out.push_back(u);
  return out;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 0; u < m_; ++u)
    for (int v = u + 1; v < m_; ++v)
      if (adj_[static_cast<std::size_t>(u) * m_ + v]) out.emplace_back(u, v);
  return out;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph g(m_);
  for (int u = 0; u < m_; ++u)
    for (int v = u + 1; v < m_; ++v)
      if (!has_edge(u, v)) g.add_edge(u, v);
  return g;
}

SimpleGraph explicit_graph(const Params& p, std::int64_t max_edges) {
  auto count = vertex_count_formula(p);
  if (count > 1'000'000) throw CapacityError("too many vertices for an explicit graph");
  SimpleGraph g(static_cast<int>(count));
  for (auto [u, v] : edge_list(p, max_edges)) g.add_edge(u, v);
  return g;
}

Hypergraph::Hypergraph(int vertex_count, std::vector<std::vector<int>> edges) : m_(vertex_count) {
  if (vertex_count < 0) throw ArgumentError("negative vertex count");
  std::set<std::vector<int>> seen;
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (e.size() < 2) throw ArgumentError("hyperedges need at least two vertices");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ArgumentError("repeated vertex in a hyperedge");
    if (e.front() < 0 || e.back() >= m_)
      throw ArgumentError("hyperedge vertex out of range 0.." + std::to_string(m_ - 1));
    if (seen.insert(e).second) edges_.push_back(std::move(e));
  }
}

SimpleGraph two_section(const Hypergraph& h) {
  SimpleGraph g(h.vertex_count());
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) g.add_edge(e[i], e[j]);
  return g;
}

namespace {

bool is_clique(const SimpleGraph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || !g.has_edge(s[i], s[j])) return false;
  return true;
}

// Fewest sets whose union is `universe`, by branching on the element with the
// fewest covering sets.
class SetCover {
 public:
  SetCover(std::uint64_t universe, std::vector<std::uint64_t> sets) : universe_(universe), sets_(std::move(sets)) {
    for (auto s : sets_) max_size_ = std::max(max_size_, std::popcount(s & universe_));
  }

  int solve() {
    if (universe_ == 0) return 0;
    best_ = greedy();
    search(0, 0);
    return best_;
  }

 private:
  int greedy() const {
    std::uint64_t covered = 0;
    int used = 0;
    while ((covered & universe_) != universe_) {
      std::uint64_t pick = 0;
      int gain = 0;
      for (auto s : sets_) {
        int g = std::popcount(s & universe_ & ~covered);
        if (g > gain) {
          gain = g;
          pick = s;
        }
      }
      if (gain == 0) throw std::logic_error("set family does not cover the universe");
      covered |= pick;
      ++used;
    }
    return used;
  }

  void search(std::uint64_t covered, int used) {
    std::uint64_t open = universe_ & ~covered;
    if (open == 0) {
      best_ = std::min(best_, used);
      return;
    }
    int need = (std::popcount(open) + max_size_ - 1) / max_size_;
    if (used + need >= best_) return;

    int pivot = -1, fewest = 1 << 30;
    for (std::uint64_t rest = open; rest; rest &= rest - 1) {
      int e = std::countr_zero(rest);
      int c = 0;
      for (auto s : sets_) c += static_cast<int>((s >> e) & 1u);
      if (c < fewest) {
        fewest = c;
        pivot = e;
      }
    }
    std::vector<std::uint64_t> options;
    for (auto s : sets_)
      if ((s >> pivot) & 1u) options.push_back(s);
    std::sort(options.begin(), options.end(), [&](std::uint64_t a, std::uint64_t b) {
      return std::popcount(a & open) > std::popcount(b & open);
    });
    for (auto s : options) search(covered | s, used + 1);
  }

  std::uint64_t universe_;
  std::vector<std::uint64_t> sets_;
  int max_size_ = 1;
  int best_ = 0;
};

}  // namespace

bool is_weak_clique(const Hypergraph& h, const std::vector<int>& vertices) {
  for (int v : vertices)
    if (v < 0 || v >= h.vertex_count()) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
  return is_clique(two_section(h), vertices);
}

SimpleGraph weak_edge_clique_graph(const Hypergraph& h) {
  SimpleGraph section = two_section(h);
  SimpleGraph g(h.edge_count());
  std::vector<int> both;
  for (int i = 0; i < h.edge_count(); ++i)
    for (int j = i + 1; j < h.edge_count(); ++j) {
      both.clear();
      std::set_union(h.edge(i).begin(), h.edge(i).end(), h.edge(j).begin(), h.edge(j).end(),
                     std::back_inserter(both));
      if (is_clique(section, both)) g.add_edge(i, j);
    }
  return g;
}

std::vector<std::uint64_t> maximal_cliques(const SimpleGraph& g) {
  const int m = g.vertex_count();
  if (m > 64) throw CapacityError("maximal clique enumeration is limited to 64 vertices");
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(m), 0);
  for (auto [u, v] : g.edges()) {
    nbr[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    nbr[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  std::vector<std::uint64_t> out;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> expand = [&](std::uint64_t r, std::uint64_t p,
                                                                               std::uint64_t x) {
    if (p == 0) {
      if (x == 0) out.push_back(r);
      return;
    }
    int pivot = std::countr_zero(p | x);
    int most = -1;
    for (std::uint64_t rest = p | x; rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      int c = std::popcount(p & nbr[static_cast<std::size_t>(u)]);
      if (c > most) {
        most = c;
        pivot = u;
      }
    }
    for (std::uint64_t rest = p & ~nbr[static_cast<std::size_t>(pivot)]; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint64_t bit = std::uint64_t{1} << v;
      expand(r | bit, p & nbr[static_cast<std::size_t>(v)], x & nbr[static_cast<std::size_t>(v)]);
      p &= ~bit;
      x |= bit;
    }
  };
  std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  if (m > 0) expand(0, all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

int vertex_clique_cover_number(const SimpleGraph& g, int cap) {
  if (g.vertex_count() > cap || g.vertex_count() > 64)
    throw CapacityError("clique cover of " + std::to_string(g.vertex_count()) + " vertices exceeds the cap of " +
                        std::to_string(std::min(cap, 64)));
  const int m = g.vertex_count();
  std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  return SetCover(all, maximal_cliques(g)).solve();
}

int chromatic_number(const SimpleGraph& g, int cap) {
  const int m = g.vertex_count();
  if (m > cap) throw CapacityError("colouring " + std::to_string(m) + " vertices exceeds the cap of " + std::to_string(cap));
  if (m == 0) return 0;
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> colour(static_cast<std::size_t>(m), -1);
  int best = m;
  std::function<void(int, int)> place = [&](int t, int used) {
    if (used >= best) return;
    if (t == m) {
      best = used;
      return;
    }
    int v = order[static_cast<std::size_t>(t)];
    for (int c = 0; c <= used && c < best; ++c) {
      bool free = true;
      for (int s = 0; s < t && free; ++s) {
        int u = order[static_cast<std::size_t>(s)];
        free = !(colour[static_cast<std::size_t>(u)] == c && g.has_edge(u, v));
      }
      if (!free) continue;
      colour[static_cast<std::size_t>(v)] = c;
      place(t + 1, std::max(used, c + 1));
      colour[static_cast<std::size_t>(v)] = -1;
    }
  };
  place(0, 0);
  return best;
}

int weak_edge_clique_cover_number(const Hypergraph& h, int cap) {
  if (h.edge_count() > cap || h.edge_count() > 64)
    throw CapacityError("weak edge clique cover of " + std::to_string(h.edge_count()) +
                        " edges exceeds the cap of " + std::to_string(std::min(cap, 64)));
  if (h.edge_count() == 0) return 0;
  auto cliques = maximal_cliques(two_section(h));
  std::vector<std::uint64_t> covers;
  for (auto c : cliques) {
    std::uint64_t mask = 0;
    for (int i = 0; i < h.edge_count(); ++i) {
      bool inside = true;
      for (int v : h.edge(i)) inside = inside && ((c >> v) & 1u);
      if (inside) mask |= std::uint64_t{1} << i;
    }
    if (mask) covers.push_back(mask);
  }
  const int e = h.edge_count();
  std::uint64_t all = e == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << e) - 1;
  return SetCover(all, covers).solve();
}

Proposition1Values proposition1_values(const Hypergraph& h) {
  return {weak_edge_clique_cover_number(h), vertex_clique_cover_number(weak_edge_clique_graph(h))};
}

bool check_proposition1(const Hypergraph& h) { return proposition1_values(h).equal(); }

Hypergraph maximal_banded_hypergraph(const Params& p) {
  p.validate();
  if (p.k < 2) throw RegimeError("hyperedges need k >= 2");
  if (vertex_count_formula(p) > 1'000'000) throw CapacityError("too many hyperedges to enumerate");
  std::vector<std::vector<int>> edges;
  for (const auto& v : enumerate_vertices(p)) edges.push_back(v.elements());
  return Hypergraph(p.n + 1, std::move(edges));
}

std::int64_t hypergraph_numbering_bandwidth(const Hypergraph& h, const std::vector<std::uint32_t>& labels) {
  const auto m = static_cast<std::size_t>(h.vertex_count());
  if (labels.size() != m) throw NumberingError("need one label per hypergraph vertex");
  std::vector<char> seen(m + 1, 0);
  for (auto l : labels) {
    if (l < 1 || l > m || seen[l]) throw NumberingError("labels are not a bijection onto 1..m");
    seen[l] = 1;
  }
  std::int64_t best = 0;
  for (const auto& e : h.edges()) {
    auto [lo, hi] = std::minmax_element(e.begin(), e.end(), [&](int a, int b) {
      return labels[static_cast<std::size_t>(a)] < labels[static_cast<std::size_t>(b)];
    });
    best = std::max<std::int64_t>(best, static_cast<std::int64_t>(labels[static_cast<std::size_t>(*hi)]) -
                                            labels[static_cast<std::size_t>(*lo)]);
  }
  return best;
}

std::vector<Hypergraph> all_small_hypergraphs(int max_vertices, int min_size, int max_size) {
  std::vector<Hypergraph> out;
  for (int m = 0; m <= max_vertices; ++m) {
    std::vector<std::vector<int>> candidates;
    for (std::uint32_t s = 0; s < (1u << m); ++s) {
      int size = std::popcount(s);
      if (size < min_size || size > max_size) continue;
      std::vector<int> e;
      for (int v = 0; v < m; ++v)
        if ((s >> v) & 1u) e.push_back(v);
      candidates.push_back(std::move(e));
    }
    std::sort(candidates.begin(), candidates.end());
    if (candidates.size() > 20) throw CapacityError("too many candidate edges to enumerate every subset");
    for (std::uint32_t pick = 0; pick < (1u << candidates.size()); ++pick) {
      std::vector<std::vector<int>> edges;
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if ((pick >> i) & 1u) edges.push_back(candidates[i]);
      out.emplace_back(m, std::move(edges));
    }
  }
  return out;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  if (hi < lo) throw ArgumentError("empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % range;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<int>(x % range);
}

Hypergraph random_hypergraph(int vertex_count, int edge_count, int min_size, int max_size, std::mt19937_64& rng) {
  if (min_size < 2 || max_size < min_size || max_size > vertex_count)
    throw ArgumentError("edge sizes must satisfy 2 <= min <= max <= vertex count");
  std::int64_t available = 0;
  for (int s = min_size; s <= max_size; ++s) available += binomial(vertex_count, s);
  if (edge_count > available) throw ArgumentError("not enough distinct edges of the requested sizes");

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> edges;
  std::vector<int> pool(static_cast<std::size_t>(vertex_count));
  while (static_cast<int>(edges.size()) < edge_count) {
    int size = uniform_int(rng, min_size, max_size);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < size; ++i)
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(uniform_int(rng, i, vertex_count - 1))]);
    std::vector<int> e(pool.begin(), pool.begin() + size);
    std::sort(e.begin(), e.end());
    if (seen.insert(e).second) edges.push_back(std::move(e));
  }
  return Hypergraph(vertex_count, std::move(edges));
}

namespace {

std::vector<long> parse_ints(const std::string& line, int line_no) {
  std::vector<long> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError(line_no, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  long m = -1;
  std::vector<std::vector<int>> edges;
  std::set<std::vector<int>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto values = parse_ints(line, line_no);
    if (m < 0) {
      if (values.size() != 1 || values[0] < 0 || values[0] > 1'000'000)
        throw ParseError(line_no, "first line must be the vertex count m");
      m = values[0];
      continue;
    }
    std::vector<int> e;
    for (long v : values) {
      if (v < 0 || v >= m) throw ParseError(line_no, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(m - 1));
      e.push_back(static_cast<int>(v));
    }
    std::sort(e.begin(), e.end());
    if (e.size() < 2) throw ParseError(line_no, "an edge needs at least two vertices");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ParseError(line_no, "repeated vertex in an edge");
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(std::move(e));
  }
  if (m < 0) throw ParseError(line_no, "missing vertex count");
  return Hypergraph(static_cast<int>(m), std::move(edges));
}

Hypergraph parse_hypergraph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

std::string format_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.vertex_count() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace gnkb

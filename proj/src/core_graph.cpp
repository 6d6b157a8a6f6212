#include "gnkb/core_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "gnkb/errors.hpp"

namespace gnkb {

std::int64_t binomial(std::int64_t top, std::int64_t bottom) {
  if (bottom < 0 || top < 0 || top < bottom) return 0;
  bottom = std::min(bottom, top - bottom);
  __int128 result = 1;
  for (std::int64_t i = 1; i <= bottom; ++i) {
    result = result * (top - bottom + i) / i;
    if (result > std::numeric_limits<std::int64_t>::max())
      throw CapacityError("binomial(" + std::to_string(top) + ", " + std::to_string(bottom) +
                          ") overflows 64 bits");
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw ArgumentError("ceil_div needs a positive divisor");
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

void Params::validate() const {
  if (k < 1) throw ParameterError("k must be positive, got " + std::to_string(k));
  if (b < std::max(1, k - 1))
    throw ParameterError("b must satisfy max(1, k-1) <= b, got k=" + std::to_string(k) +
                         " b=" + std::to_string(b));
  if (b > n) throw ParameterError("b must not exceed n, got b=" + std::to_string(b) + " n=" + std::to_string(n));
}

Vertex::Vertex(std::vector<int> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw ArgumentError("a vertex needs at least one element");
  for (std::size_t i = 1; i < elements_.size(); ++i)
    if (elements_[i - 1] >= elements_[i]) throw ArgumentError("vertex elements must be strictly increasing");
}

Vertex::Vertex(std::initializer_list<int> elements) : Vertex(std::vector<int>(elements)) {}

std::vector<int> Vertex::reversed() const { return {elements_.rbegin(), elements_.rend()}; }

Vertex Vertex::complement(int n) const {
  std::vector<int> c;
  c.reserve(elements_.size());
  for (auto it = elements_.rbegin(); it != elements_.rend(); ++it) c.push_back(n - *it);
  return Vertex(std::move(c));
}

void Vertex::check_shape(const Params& p) const {
  if (size() != p.k)
    throw ArgumentError("vertex has " + std::to_string(size()) + " elements, expected k=" + std::to_string(p.k));
  if (lo() < 0 || hi() > p.n) throw ArgumentError("vertex elements must lie in [0, n]");
}

std::size_t VertexHash::operator()(const Vertex& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : v.elements()) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
  return h;
}

std::vector<Vertex> enumerate_vertices(const Params& p) {
  p.validate();
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(vertex_count_formula(p)));
  std::vector<int> current;
  current.reserve(static_cast<std::size_t>(p.k));
  std::function<void(int)> extend = [&](int next) {
    if (static_cast<int>(current.size()) == p.k) {
      out.emplace_back(current);
      return;
    }
    int remaining = p.k - static_cast<int>(current.size());
    int limit = current.empty() ? p.n : std::min(p.n, current.front() + p.b);
    for (int v = next; v + remaining - 1 <= limit; ++v) {
      current.push_back(v);
      extend(v + 1);
      current.pop_back();
    }
  };
  extend(0);
  return out;
}

std::int64_t vertex_count_by_partition(const Params& p) {
  return (p.n - p.b + 1) * binomial(p.b, p.k - 1) + binomial(p.b, p.k);
}

std::int64_t vertex_count_by_shift(const Params& p) {
  return (p.n + 1) * binomial(p.b, p.k - 1) - (p.k - 1) * binomial(p.b + 1, p.k);
}

std::int64_t vertex_count_formula(const Params& p) {
  p.validate();
  std::int64_t a = vertex_count_by_partition(p);
  std::int64_t b = vertex_count_by_shift(p);
  if (a != b) throw std::logic_error("vertex count closed forms disagree");
  return a;
}

bool is_vertex(const Vertex& x, const Params& p) {
  x.check_shape(p);
  return x.span() <= p.b;
}

bool are_adjacent(const Vertex& x, const Vertex& y, const Params& p) {
  if (x == y) throw ArgumentError("adjacency queried for a vertex with itself");
  bool union_span = std::max(x.hi(), y.hi()) - std::min(x.lo(), y.lo()) <= p.b;
  bool one_sided = x.hi() - y.lo() <= p.b && y.hi() - x.lo() <= p.b;
  if (x.span() <= p.b && y.span() <= p.b && union_span != one_sided)
    throw std::logic_error("adjacency formulations disagree");
  return union_span;
}

std::int64_t central_count(const Params& p) {
  p.validate();
  return binomial(2 * static_cast<std::int64_t>(p.b) - p.n + 1, p.k);
}

bool is_central(const Vertex& x, const Params& p) { return p.n - p.b <= x.lo() && x.hi() <= p.b; }

namespace {

void require_connected(const Params& p) {
  if (p.b - p.k + 1 <= 0 && p.n > p.b)
    throw RegimeError("G_{n,k,b} with b = k-1 < n is edgeless and disconnected");
}

}  // namespace

std::int64_t interval_distance(int i, int j, const Params& p) {
  p.validate();
  if (i >= j) throw ArgumentError("interval_distance needs i < j");
  if (i < 0 || j > p.n - (p.k - 1)) throw ArgumentError("interval start outside [0, n-k+1]");
  require_connected(p);
  return ceil_div(j - i, p.b - p.k + 1);
}

std::int64_t distance_upper_bound(const Vertex& x, const Vertex& y, const Params& p) {
  p.validate();
  bool ordered = x.lo() < y.lo() || (x.lo() == y.lo() && x.hi() < y.hi());
  if (!ordered) throw ArgumentError("distance_upper_bound needs x.lo < y.lo, or equal lo and x.hi < y.hi");
  require_connected(p);
  return ceil_div(y.hi() - x.lo() - p.b, p.b - p.k + 1) + 1;
}

std::int64_t graph_distance_bfs(const Vertex& x, const Vertex& y, const Params& p) {
  if (!is_vertex(x, p) || !is_vertex(y, p)) throw ArgumentError("both endpoints must be vertices of G");
  if (x == y) return 0;
  auto vertices = enumerate_vertices(p);
  auto index = [&](const Vertex& v) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  std::vector<int> dist(vertices.size(), -1);
  std::size_t source = index(x), target = index(y);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w = 0; w < vertices.size(); ++w) {
      if (dist[w] >= 0 || w == u) continue;
      if (!are_adjacent(vertices[u], vertices[w], p)) continue;
      dist[w] = dist[u] + 1;
      if (w == target) return dist[w];
      queue.push_back(w);
    }
  }
  throw RegimeError("vertices are in different components");
}

std::int64_t diameter(const Params& p) {
  p.validate();
  if (p.n == p.b && p.b == p.k - 1) return 0;  // a single vertex
  require_connected(p);
  return ceil_div(p.n - p.k + 1, p.b - p.k + 1);
}

std::vector<SpanClass> span_classes(const Params& p) {
  p.validate();
  if (p.k < 2) throw RegimeError("span classes need k >= 2; use enumeration for k = 1");
  std::vector<SpanClass> out;
  for (int lo = 0; lo <= p.n; ++lo)
    for (int hi = lo + p.k - 1; hi <= std::min(p.n, lo + p.b); ++hi)
      out.push_back({lo, hi, binomial(hi - lo - 1, p.k - 2)});
  return out;
}

namespace {

// Feasible (lo, hi) pairs for any k >= 1 together with their sizes.
std::vector<SpanClass> classes_any_k(const Params& p) {
  if (p.k >= 2) return span_classes(p);
  std::vector<SpanClass> out;
  for (int i = 0; i <= p.n; ++i) out.push_back({i, i, 1});
  return out;
}

}  // namespace

std::int64_t edge_count(const Params& p) {
  p.validate();
  auto classes = classes_any_k(p);
  // prefix[lo][hi] = total size over classes with lo' >= lo and hi' <= hi
  const int w = p.n + 1;
  std::vector<std::int64_t> agg(static_cast<std::size_t>(w) * w, 0);
  auto at = [&](int lo, int hi) -> std::int64_t& { return agg[static_cast<std::size_t>(lo) * w + hi]; };
  for (const auto& c : classes) at(c.lo, c.hi) += c.size;
  for (int lo = p.n; lo >= 0; --lo)
    for (int hi = 0; hi <= p.n; ++hi) {
      std::int64_t v = at(lo, hi);
      if (lo + 1 <= p.n) v += at(lo + 1, hi);
      if (hi >= 1) v += at(lo, hi - 1);
      if (lo + 1 <= p.n && hi >= 1) v -= at(lo + 1, hi - 1);
      at(lo, hi) = v;
    }
  __int128 ordered = 0;
  for (const auto& c : classes) {
    int lo = std::max(0, c.hi - p.b);
    int hi = std::min(p.n, c.lo + p.b);
    ordered += static_cast<__int128>(c.size) * at(lo, hi) - c.size;
  }
  return static_cast<std::int64_t>(ordered / 2);
}

std::vector<std::pair<std::int32_t, std::int32_t>> edge_list(const Params& p, std::int64_t max_edges) {
  std::int64_t m = edge_count(p);
  if (m > max_edges)
    throw CapacityError("G has " + std::to_string(m) + " edges, above the materialization limit of " +
                        std::to_string(max_edges));
  auto vertices = enumerate_vertices(p);
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t u = 0; u < vertices.size(); ++u)
    for (std::size_t w = u + 1; w < vertices.size(); ++w) {
      // sorted by lo, so every later vertex is out of reach too
      if (vertices[w].lo() - vertices[u].lo() > p.b) break;
      if (classes_adjacent(vertices[u].lo(), vertices[u].hi(), vertices[w].lo(), vertices[w].hi(), p.b))
        edges.emplace_back(static_cast<std::int32_t>(u), static_cast<std::int32_t>(w));
    }
  return edges;
}

ClassDistances::ClassDistances(const Params& p) : params_(p) {
  p.validate();
  auto classes = classes_any_k(p);
  const int w = p.n + 1;
  grid_.assign(static_cast<std::size_t>(w) * w, -1);
  for (const auto& c : classes) {
    grid_[static_cast<std::size_t>(c.lo) * w + c.hi] = static_cast<int>(lo_.size());
    lo_.push_back(c.lo);
    hi_.push_back(c.hi);
    size_.push_back(c.size);
  }
  neighbours_.resize(lo_.size());
  for (std::size_t a = 0; a < lo_.size(); ++a)
    for (std::size_t c = 0; c < lo_.size(); ++c)
      if (a != c && classes_adjacent(lo_[a], hi_[a], lo_[c], hi_[c], p.b))
        neighbours_[a].push_back(static_cast<int>(c));
}

int ClassDistances::index_of(int lo, int hi) const {
  if (lo < 0 || hi < 0 || lo > params_.n || hi > params_.n) return -1;
  return grid_[static_cast<std::size_t>(lo) * (params_.n + 1) + hi];
}

std::vector<int> ClassDistances::from(int lo, int hi) const {
  int s = index_of(lo, hi);
  if (s < 0) throw ArgumentError("no span class with the given (lo, hi)");
  std::vector<int> dist(lo_.size(), -1);
  std::deque<int> queue{s};
  dist[static_cast<std::size_t>(s)] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : neighbours_[static_cast<std::size_t>(u)])
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

int ClassDistances::vertex_distance(const std::vector<int>& row, const Vertex& x, const Vertex& y) const {
  if (x == y) return 0;
  if (x.lo() == y.lo() && x.hi() == y.hi()) return 1;
  return row[static_cast<std::size_t>(index_of(y.lo(), y.hi()))];
}

int ClassDistances::eccentricity_max() const {
  int best = 0;
  for (std::size_t a = 0; a < lo_.size(); ++a) {
    if (size_[a] >= 2) best = std::max(best, 1);
    auto row = from(lo_[a], hi_[a]);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == a) continue;
      if (row[c] < 0) return -1;
      best = std::max(best, row[c]);
    }
  }
  return best;
}

}  // namespace gnkb

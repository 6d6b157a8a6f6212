#include "gnkb/solver.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "gnkb/bounds.hpp"
#include "gnkb/errors.hpp"

namespace gnkb {

std::int64_t graph_bandwidth(const SimpleGraph& g, const std::vector<std::uint32_t>& labels) {
  const auto m = static_cast<std::size_t>(g.vertex_count());
  if (labels.size() != m) throw NumberingError("need one label per vertex");
  std::vector<char> seen(m + 1, 0);
  for (auto l : labels) {
    if (l < 1 || l > m || seen[l]) throw NumberingError("labels are not a bijection onto 1..m");
    seen[l] = 1;
  }
  std::int64_t best = 0;
  for (auto [u, v] : g.edges()) {
    std::int64_t d = static_cast<std::int64_t>(labels[static_cast<std::size_t>(u)]) - labels[static_cast<std::size_t>(v)];
    best = std::max(best, d < 0 ? -d : d);
  }
  return best;
}

namespace {

constexpr int kFar = std::numeric_limits<int>::max() / 2;

std::vector<std::uint32_t> labels_from_order(const std::vector<int>& order) {
  std::vector<std::uint32_t> labels(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) labels[static_cast<std::size_t>(order[t])] = static_cast<std::uint32_t>(t + 1);
  return labels;
}

// max(ceil(maxdeg / 2), ceil((|comp| - 1) / diam(comp)) over components)
std::int64_t simple_lower_bound(const SimpleGraph& g, const std::vector<std::vector<int>>& adj) {
  const int m = g.vertex_count();
  std::int64_t lower = 0;
  for (int v = 0; v < m; ++v) lower = std::max<std::int64_t>(lower, (static_cast<std::int64_t>(adj[v].size()) + 1) / 2);
  std::vector<int> comp(static_cast<std::size_t>(m), -1);
  for (int s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = s;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int u : adj[members[i]])
        if (comp[u] < 0) {
          comp[u] = s;
          members.push_back(u);
        }
    if (members.size() < 2) continue;
    int diam = 0;
    std::vector<int> dist(static_cast<std::size_t>(m));
    for (int src : members) {
      std::fill(dist.begin(), dist.end(), -1);
      std::deque<int> queue{src};
      dist[src] = 0;
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        diam = std::max(diam, dist[x]);
        for (int y : adj[x])
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            queue.push_back(y);
          }
      }
    }
    lower = std::max(lower, ceil_div(static_cast<std::int64_t>(members.size()) - 1, diam));
  }
  return lower;
}

// Breadth-first numbering from a minimum-degree vertex of each component.
std::vector<int> cuthill_mckee(const std::vector<std::vector<int>>& adj) {
  const int m = static_cast<int>(adj.size());
  std::vector<int> order, by_degree(static_cast<std::size_t>(m));
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) { return adj[a].size() < adj[b].size(); });
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (int s : by_degree) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      int x = order[head++];
      std::vector<int> next;
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          next.push_back(y);
        }
      std::stable_sort(next.begin(), next.end(), [&](int a, int b) { return adj[a].size() < adj[b].size(); });
      order.insert(order.end(), next.begin(), next.end());
    }
  }
  return order;
}

class Placement {
 public:
  Placement(const std::vector<std::vector<int>>& adj, int width) : adj_(adj), m_(static_cast<int>(adj.size())), w_(width) {
    pos_.assign(static_cast<std::size_t>(m_), 0);
    rank_.resize(static_cast<std::size_t>(m_));
    std::iota(rank_.begin(), rank_.end(), 0);
    std::stable_sort(rank_.begin(), rank_.end(), [&](int a, int b) { return adj_[a].size() > adj_[b].size(); });
  }

  bool run() { return place(1, 0); }
  std::vector<int> order() const {
    std::vector<int> out(static_cast<std::size_t>(m_));
    for (int v = 0; v < m_; ++v) out[static_cast<std::size_t>(pos_[v] - 1)] = v;
    return out;
  }

 private:
  std::string state_key(int t, std::uint32_t mask) const {
    std::string key(reinterpret_cast<const char*>(&mask), sizeof mask);
    for (int u = 0; u < m_; ++u) {
      if (!pos_[u] || pos_[u] + w_ < t) continue;
      bool active = false;
      for (int y : adj_[u]) active = active || !pos_[y];
      if (!active) continue;
      key.push_back(static_cast<char>(u));
      key.push_back(static_cast<char>(t - pos_[u]));
    }
    return key;
  }

  bool place(int t, std::uint32_t mask) {
    if (t > m_) return true;
    std::vector<int> deadline(static_cast<std::size_t>(m_), kFar);
    for (int u = 0; u < m_; ++u) {
      if (!pos_[u]) continue;
      for (int y : adj_[u])
        if (!pos_[y]) deadline[y] = std::min(deadline[y], pos_[u] + w_);
    }
    std::vector<int> due;
    for (int v = 0; v < m_; ++v)
      if (!pos_[v] && deadline[v] < kFar) due.push_back(deadline[v]);
    std::sort(due.begin(), due.end());
    // earliest-deadline-first: the j-th deadline needs j free positions from t on
    for (std::size_t j = 0; j < due.size(); ++j)
      if (due[j] < t + static_cast<int>(j)) return false;

    std::string key = state_key(t, mask);
    if (failed_.count(key)) return false;

    std::vector<int> candidates;
    for (int v : rank_)
      if (!pos_[v] && (due.empty() || due.front() > t || deadline[v] == t)) candidates.push_back(v);
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) { return deadline[a] < deadline[b]; });
    for (int v : candidates) {
      pos_[v] = t;
      if (place(t + 1, mask | (std::uint32_t{1} << v))) return true;
      pos_[v] = 0;
    }
    failed_.insert(std::move(key));
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  int m_;
  int w_;
  std::vector<int> pos_;
  std::vector<int> rank_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

BandwidthResult exact_bandwidth(const SimpleGraph& g, int cap) {
  const int m = g.vertex_count();
  if (m > cap || m > 32)
    throw CapacityError("exact bandwidth of " + std::to_string(m) + " vertices exceeds the solver cap of " +
                        std::to_string(std::min(cap, 32)) + "; use certify() bounds instead");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) adj[v] = g.neighbors(v);

  std::vector<int> best_order(static_cast<std::size_t>(m));
  std::iota(best_order.begin(), best_order.end(), 0);
  std::int64_t upper = graph_bandwidth(g, labels_from_order(best_order));
  auto cm = cuthill_mckee(adj);
  if (auto w = graph_bandwidth(g, labels_from_order(cm)); w < upper) {
    upper = w;
    best_order = cm;
  }

  for (std::int64_t w = simple_lower_bound(g, adj); w < upper; ++w) {
    Placement search(adj, static_cast<int>(w));
    if (search.run()) {
      best_order = search.order();
      upper = w;
      break;
    }
  }
  return {upper, best_order, labels_from_order(best_order)};
}

Certificate certify(const Params& p, int solver_cap) {
  p.validate();
  std::int64_t lower = chvatal_lower_bound(p);
  if (central_count(p) > 0) lower = std::max(lower, central_lower_bound(p));

  std::vector<Method> methods{Method::lex, Method::spo};
  if (2 * p.b <= p.n) {
    PolygonOrdering po(p);
    methods.push_back(po.which() == BetaCase::A ? Method::case_a : Method::case_b);
  }
  std::optional<Numbering> witness;
  std::int64_t upper = 0;
  for (Method m : methods) {
    Numbering f = make_numbering(p, m);
    std::int64_t w = bandwidth_of_numbering(f);
    if (!witness || w < upper) {
      upper = w;
      witness = std::move(f);
    }
  }

  Certificate cert{lower, upper, std::move(*witness), lower == upper, std::nullopt};
  if (solver_cap > 0 && vertex_count_formula(p) <= solver_cap) {
    auto result = exact_bandwidth(explicit_graph(p), solver_cap);
    cert.solver_value = result.width;
    if (result.width < cert.upper) {
      cert.upper = result.width;
      cert.witness = Numbering::from_labels(p, cert.witness.shared_vertices(), result.labels, Method::custom);
    }
    cert.exact = cert.lower == cert.upper;
  }
  return cert;
}

}  // namespace gnkb

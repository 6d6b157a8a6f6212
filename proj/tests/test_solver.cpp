#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gnkb/bounds.hpp"
#include "gnkb/core_graph.hpp"
#include "gnkb/errors.hpp"
#include "gnkb/hypergraph.hpp"
#include "gnkb/numbering.hpp"
#include "gnkb/solver.hpp"

using namespace gnkb;

namespace {

SimpleGraph random_graph(int m, double density, std::mt19937_64& rng) {
  SimpleGraph g(m);
  std::bernoulli_distribution coin(density);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// minimum over all m! orders of max |pos(u) - pos(v)|
std::int64_t permutation_bandwidth(const SimpleGraph& g) {
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()));
  std::iota(pos.begin(), pos.end(), 0);
  const auto edges = g.edges();
  std::int64_t best = g.vertex_count();
  do {
    std::int64_t w = 0;
    for (auto [u, v] : edges) w = std::max<std::int64_t>(w, std::abs(pos[u] - pos[v]));
    best = std::min(best, w);
  } while (std::next_permutation(pos.begin(), pos.end()));
  return edges.empty() ? 0 : best;
}

void check_witness(const SimpleGraph& g, const BandwidthResult& r) {
  const auto m = static_cast<std::size_t>(g.vertex_count());
  REQUIRE(r.order.size() == m);
  REQUIRE(r.labels.size() == m);
  for (std::size_t t = 0; t < m; ++t) CHECK(r.labels[static_cast<std::size_t>(r.order[t])] == t + 1);
  CHECK(graph_bandwidth(g, r.labels) == r.width);
}

}  // namespace

TEST_CASE("graph_bandwidth of a fixed numbering") {
  SimpleGraph g(4);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  CHECK(graph_bandwidth(g, {1, 2, 3, 4}) == 3);
  CHECK(graph_bandwidth(g, {1, 3, 4, 2}) == 1);
  CHECK(graph_bandwidth(SimpleGraph(3), {3, 1, 2}) == 0);
  CHECK_THROWS_AS(graph_bandwidth(g, {1, 2, 2, 4}), NumberingError);
}

TEST_CASE("trivial examples") {
  for (int m = 2; m <= 12; ++m) {
    SimpleGraph path(m), complete(m);
    for (int v = 0; v + 1 < m; ++v) path.add_edge(v, v + 1);
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v) complete.add_edge(u, v);
    auto p = exact_bandwidth(path);
    CHECK(p.width == 1);
    check_witness(path, p);
    auto c = exact_bandwidth(complete);
    CHECK(c.width == m - 1);
    check_witness(complete, c);
  }
  CHECK(exact_bandwidth(SimpleGraph(0)).width == 0);
  CHECK(exact_bandwidth(SimpleGraph(5)).width == 0);
  CHECK(exact_bandwidth(explicit_graph(Params{4, 2, 2})).width == 2);
}

TEST_CASE("exact bandwidth equals the permutation minimum on small graphs") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 250; ++t) {
    const int m = 1 + t % 8;
    auto g = random_graph(m, 0.1 + 0.1 * (t % 7), rng);
    auto r = exact_bandwidth(g);
    CHECK(r.width == permutation_bandwidth(g));
    check_witness(g, r);
  }
}

TEST_CASE("disconnected graphs and stars") {
  SimpleGraph g(9);
  for (int v = 1; v <= 4; ++v) g.add_edge(0, v);  // star K_{1,4}
  g.add_edge(5, 6);
  g.add_edge(6, 7);
  g.add_edge(5, 7);
  auto r = exact_bandwidth(g);
  CHECK(r.width == 2);
  check_witness(g, r);
}

TEST_CASE("capacity errors") {
  CHECK_THROWS_AS(exact_bandwidth(SimpleGraph(25)), CapacityError);
  CHECK_THROWS_AS(exact_bandwidth(SimpleGraph(10), 9), CapacityError);
  CHECK_THROWS_AS(exact_bandwidth(SimpleGraph(33), 40), CapacityError);
  CHECK_NOTHROW(exact_bandwidth(SimpleGraph(30), 30));
}

TEST_CASE("exact bandwidth of G_{n,k,b}: formula in the dense regime, sandwich elsewhere") {
  int formula_cases = 0;
  for (int k = 1; k <= 4; ++k)
    for (int n = std::max(1, k - 1); n <= 16; ++n)
      for (int b = std::max(1, k - 1); b <= n; ++b) {
        Params p{n, k, b};
        if (vertex_count_formula(p) > 16) continue;
        auto g = explicit_graph(p);
        auto r = exact_bandwidth(g);
        check_witness(g, r);
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(b);
        if (2 * b >= n + k - 1 && k >= 2) {
          CHECK(r.width == theorem1a_value(p));
          ++formula_cases;
        }
        CHECK(chvatal_lower_bound(p) <= r.width);
        CHECK(r.width <= bandwidth_of_numbering(lex_numbering(p)));
        CHECK(r.width <= lex_upper_bound_value(p));
      }
  CHECK(formula_cases >= 15);
}

TEST_CASE("certify examples") {
  auto a = certify(Params{5, 2, 4});
  CHECK(a.exact);
  CHECK(a.lower == 9);
  CHECK(a.upper == 9);
  CHECK(bandwidth_of_numbering(a.witness) == 9);

  auto b = certify(Params{10, 2, 3});
  CHECK(b.exact);
  CHECK(b.upper == 6);

  auto c = certify(Params{20, 2, 7}, 0);
  CHECK_FALSE(c.exact);
  CHECK(c.lower < c.upper);
  CHECK_FALSE(c.solver_value.has_value());
  CHECK(bandwidth_of_numbering(c.witness) == c.upper);
}

TEST_CASE("certify sandwiches the solver") {
  for (int k = 2; k <= 3; ++k)
    for (int n = k; n <= 9; ++n)
      for (int b = std::max(1, k - 1); b <= n; ++b) {
        Params p{n, k, b};
        auto c = certify(p, 20);
        CHECK(c.lower <= c.upper);
        CHECK(bandwidth_of_numbering(c.witness) == c.upper);
        CHECK(c.exact == (c.lower == c.upper));
        if (c.solver_value) {
          CHECK(c.lower <= *c.solver_value);
          CHECK(*c.solver_value == c.upper);
        }
      }
}

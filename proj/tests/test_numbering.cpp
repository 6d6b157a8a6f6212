#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gnkb/bounds.hpp"
#include "gnkb/errors.hpp"
#include "gnkb/numbering.hpp"

using namespace gnkb;

namespace {

// max label difference over all adjacent pairs, scanning every pair
std::int64_t oracle_bandwidth(const Numbering& f) {
  const auto& vs = f.vertices();
  std::int64_t best = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (std::max(vs[i].hi(), vs[j].hi()) - std::min(vs[i].lo(), vs[j].lo()) > f.params().b) continue;
      std::int64_t d = static_cast<std::int64_t>(f.label_at(i)) - f.label_at(j);
      best = std::max(best, d < 0 ? -d : d);
    }
  return best;
}

Numbering random_numbering(const Params& p, std::mt19937_64& rng) {
  auto vertices = std::make_shared<const std::vector<Vertex>>(enumerate_vertices(p));
  std::vector<std::uint32_t> labels(vertices->size());
  std::iota(labels.begin(), labels.end(), 1u);
  std::shuffle(labels.begin(), labels.end(), rng);
  return Numbering::from_labels(p, vertices, labels);
}

std::vector<Params> polygon_instances(BetaCase which) {
  std::vector<Params> out;
  for (int n = 4; n <= 36; ++n)
    for (int b = 1; 2 * b <= n; ++b)
      for (int k = 2; k <= 3; ++k) {
        if (b < k - 1) continue;
        if (classify_case(make_rational(b, n)).which == which) out.push_back({n, k, b});
      }
  return out;
}

}  // namespace

TEST_CASE("method names") {
  for (Method m : {Method::lex, Method::spo, Method::case_a, Method::case_b}) CHECK(parse_method(to_string(m)) == m);
  CHECK(parse_method("case-b") == Method::case_b);
  CHECK_THROWS_AS(parse_method("rcm"), ParameterError);
}

TEST_CASE("numbering construction rejects non-bijections") {
  Params p{4, 2, 3};
  auto vs = std::make_shared<const std::vector<Vertex>>(enumerate_vertices(p));
  std::vector<std::uint32_t> labels(vs->size());
  std::iota(labels.begin(), labels.end(), 1u);
  CHECK_NOTHROW(Numbering::from_labels(p, vs, labels));
  labels[3] = labels[4];
  CHECK_THROWS_AS(Numbering::from_labels(p, vs, labels), NumberingError);
  labels[3] = 0;
  CHECK_THROWS_AS(Numbering::from_labels(p, vs, labels), NumberingError);
  CHECK_THROWS_AS(Numbering::from_labels(p, vs, std::vector<std::uint32_t>{1, 2}), NumberingError);
  CHECK_THROWS_AS(Numbering::from_order(p, vs, std::vector<std::uint32_t>(9, 0), Method::custom), NumberingError);
}

TEST_CASE("label lookup and order round trip") {
  auto f = lex_numbering({4, 2, 3});
  CHECK(f.label_of({0, 1}) == 1);
  CHECK(f.label_of({3, 4}) == 9);
  CHECK_THROWS_AS(f.label_of({0, 4}), ArgumentError);
  auto g = spo_numbering({4, 2, 3});
  auto order = g.order();
  for (std::size_t t = 0; t < order.size(); ++t) CHECK(g.label_at(order[t]) == t + 1);
}

TEST_CASE("bandwidth examples") {
  CHECK(bandwidth_of_numbering(lex_numbering({2, 2, 2})) == 2);
  CHECK(bandwidth_of_numbering(lex_numbering({10, 2, 3})) == 6);
  CHECK(bandwidth_of_numbering(spo_numbering({4, 2, 3})) == 5);
  CHECK(bandwidth_of_numbering(spo_numbering({2, 2, 2})) == 2);
  CHECK(bandwidth_of_numbering(spo_numbering({5, 2, 4})) == 9);
  CHECK(bandwidth_of_numbering(lex_numbering({6, 3, 6})) == binomial(7, 3) - 1);
}

TEST_CASE("aggregate bandwidth equals the pair scan and the edge-list scan") {
  std::mt19937_64 rng(11);
  for (int k = 1; k <= 4; ++k)
    for (int n = std::max(1, k - 1); n <= 11; ++n)
      for (int b = std::max(1, k - 1); b <= n; ++b) {
        Params p{n, k, b};
        for (const auto& f : {lex_numbering(p), spo_numbering(p), random_numbering(p, rng), random_numbering(p, rng)}) {
          auto oracle = oracle_bandwidth(f);
          CHECK(bandwidth_of_numbering(f) == oracle);
          CHECK(brute_force_bandwidth(f) == oracle);
        }
      }
}

TEST_CASE("lex numbering respects k*C(b,k)") {
  for (int k = 2; k <= 4; ++k)
    for (int n = k - 1; n <= 40; n += 3)
      for (int b = k - 1; b <= n; b += 2) {
        Params p{n, k, b};
        CHECK(bandwidth_of_numbering(lex_numbering(p)) <= lex_upper_bound_value(p));
      }
}

TEST_CASE("spo partition invariants") {
  for (int k = 2; k <= 4; ++k)
    for (int n = k - 1; n <= 16; ++n)
      for (int b = k - 1; b <= n; ++b) {
        Params p{n, k, b};
        auto vs = enumerate_vertices(p);
        auto part = spo_partition(p, vs);
        CHECK(part.r0.size() + part.central.size() + part.r1.size() == vs.size());
        auto diff = static_cast<long>(part.r0.size()) - static_cast<long>(part.r1.size());
        CHECK(std::abs(diff) <= 1);
        auto d = static_cast<long>(part.boundary_to_r0.size()) - static_cast<long>(part.boundary_to_r1.size());
        CHECK((d == 0 || d == 1));
        for (auto i : part.central) CHECK(is_central(vs[i], p));
        auto in = [](const std::vector<std::uint32_t>& v, std::uint32_t x) {
          return std::find(v.begin(), v.end(), x) != v.end();
        };
        for (auto i : part.r0)
          if (!in(part.boundary_to_r0, i)) CHECK(vs[i].lo() + vs[i].hi() < n);
        for (auto i : part.r1)
          if (!in(part.boundary_to_r1, i)) CHECK(vs[i].lo() + vs[i].hi() > n);
        for (std::size_t t = 1; t < part.r1.size(); ++t)
          CHECK(vs[part.r1[t - 1]].reversed() < vs[part.r1[t]].reversed());
        for (std::size_t t = 1; t < part.r0.size(); ++t) CHECK(vs[part.r0[t - 1]] < vs[part.r0[t]]);
      }
}

TEST_CASE("spo meets the central lower bound in the large-b regime") {
  for (int k = 2; k <= 4; ++k)
    for (int n = k - 1; n <= 24; ++n)
      for (int b = std::max(1, k - 1); b <= n; ++b) {
        if (2 * b < n + k - 1) continue;
        Params p{n, k, b};
        CHECK(bandwidth_of_numbering(spo_numbering(p)) == central_lower_bound(p));
      }
}

TEST_CASE("polygon orderings reject the wrong case and the wrong regime") {
  CHECK_NOTHROW(case_a_numbering({20, 2, 9}));
  CHECK_NOTHROW(case_b_numbering({20, 2, 7}));
  CHECK_THROWS_AS(case_b_numbering({20, 2, 9}), RegimeError);
  CHECK_THROWS_AS(case_a_numbering({20, 2, 7}), RegimeError);
  CHECK_THROWS_AS(case_a_numbering({20, 2, 11}), RegimeError);
  CHECK_THROWS_AS(make_numbering({20, 2, 9}, Method::custom), ParameterError);
}

TEST_CASE("block classification covers every class exactly once, in ordinal position") {
  for (BetaCase which : {BetaCase::A, BetaCase::B})
    for (const auto& p : polygon_instances(which)) {
      PolygonOrdering po(p);
      CHECK(po.which() == which);
      CHECK(po.block_count() == 2 * static_cast<int>(po.decomposition().q) + 1);
      for (int lo = 0; lo <= p.n; ++lo)
        for (int hi = lo; hi <= std::min(p.n, lo + p.b); ++hi) {
          int block = -1;
          CHECK_NOTHROW(block = po.block_of(lo, hi));
          CHECK(block >= 0);
          CHECK(block < po.block_count());
        }
    }
}

TEST_CASE("band-boundary points are classified") {
  Params p{20, 2, 9};
  PolygonOrdering po(p);
  for (int lo = 0; lo + p.b <= p.n; ++lo) CHECK_NOTHROW(po.block_of(lo, lo + p.b));
  CHECK(po.block_name(0) == "Q0");
  CHECK(po.block_name(1) == "T1");
  PolygonOrdering pb({20, 2, 7});
  CHECK(pb.block_name(0) == "Hx0");
  CHECK(pb.block_name(1) == "Tr1");
}

TEST_CASE("polygon comparators are strict weak orders on random triples") {
  std::mt19937_64 rng(5);
  for (BetaCase which : {BetaCase::A, BetaCase::B}) {
    auto instances = polygon_instances(which);
    for (int trial = 0; trial < 40; ++trial) {
      const auto& p = instances[rng() % instances.size()];
      PolygonOrdering po(p);
      auto vs = enumerate_vertices(p);
      for (int t = 0; t < 300; ++t) {
        const auto& x = vs[rng() % vs.size()];
        const auto& y = vs[rng() % vs.size()];
        const auto& z = vs[rng() % vs.size()];
        CHECK_FALSE(po.less(x, x));
        if (po.less(x, y)) CHECK_FALSE(po.less(y, x));
        if (po.less(x, y) && po.less(y, z)) CHECK(po.less(x, z));
        if (!(x == y)) CHECK(po.less(x, y) != po.less(y, x));
        auto kx = po.key(x.lo(), x.hi()), ky = po.key(y.lo(), y.hi());
        CHECK(PolygonOrdering::compare(kx, ky) == -PolygonOrdering::compare(ky, kx));
        if (kx.block < ky.block) CHECK(po.less(x, y));
      }
    }
  }
}

TEST_CASE("polygon numberings follow the comparator") {
  for (const auto& p : std::vector<Params>{{20, 2, 9}, {20, 3, 9}, {20, 2, 7}, {30, 3, 8}}) {
    PolygonOrdering po(p);
    auto f = make_numbering(p, po.which() == BetaCase::A ? Method::case_a : Method::case_b);
    auto order = f.order();
    const auto& vs = f.vertices();
    for (std::size_t t = 1; t < order.size(); ++t) CHECK(po.less(vs[order[t - 1]], vs[order[t]]));
    CHECK(bandwidth_of_numbering(f) == oracle_bandwidth(f));
  }
}

TEST_CASE("case-a order puts X before Y only when min X <= max Y") {
  for (const auto& p : polygon_instances(BetaCase::A)) {
    if (p.n > 24) continue;
    auto f = case_a_numbering(p);
    auto order = f.order();
    const auto& vs = f.vertices();
    // X before Y  =>  lo(X) <= hi(Y): the running maximum of lo never exceeds hi(Y)
    int max_lo = -1;
    for (auto idx : order) {
      CHECK(max_lo <= vs[idx].hi());
      max_lo = std::max(max_lo, vs[idx].lo());
    }
  }
}

TEST_CASE("polygon numberings never beat the chvatal lower bound") {
  for (BetaCase which : {BetaCase::A, BetaCase::B})
    for (const auto& p : polygon_instances(which)) {
      if (p.n % 4 != 0) continue;
      auto w = bandwidth_of_numbering(make_numbering(p, which == BetaCase::A ? Method::case_a : Method::case_b));
      CHECK(w >= chvatal_lower_bound(p));
    }
}

TEST_CASE("r = 0 degenerate case a is total") {
  for (const auto& p : std::vector<Params>{{20, 2, 10}, {21, 3, 7}, {24, 2, 6}}) {
    auto f = case_a_numbering(p);
    CHECK(f.size() == static_cast<std::size_t>(vertex_count_formula(p)));
  }
}

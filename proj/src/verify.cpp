#include "gnkb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "gnkb/bounds.hpp"
#include "gnkb/errors.hpp"
#include "gnkb/geometry.hpp"
#include "gnkb/hypergraph.hpp"
#include "gnkb/numbering.hpp"
#include "gnkb/rational.hpp"
#include "gnkb/solver.hpp"

namespace gnkb {

bool SuiteReport::passed() const { return failures() == 0; }

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.pass; }));
}

namespace {

std::string instance(const Params& p) {
  return "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) + " b=" + std::to_string(p.b);
}

std::string instance(const Rational& beta, int k) { return "beta=" + to_string(beta) + " k=" + std::to_string(k); }

Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// every valid b for (n, k) with 2b >= n + k - 1
std::vector<int> large_b_values(int n, int k) {
  std::vector<int> out;
  for (int b = std::max(1, k - 1); b <= n; ++b)
    if (2 * b >= n + k - 1) out.push_back(b);
  return out;
}

SuiteReport suite_thm1a() {
  SuiteReport rep{"thm1a", {}};
  for (int k = 2; k <= 3; ++k)
    for (int n = k - 1; n <= 9; ++n)
      for (int b : large_b_values(n, k)) {
        Params p{n, k, b};
        if (vertex_count_formula(p) > 16) continue;
        auto exact = exact_bandwidth(explicit_graph(p), 16).width;
        auto formula = theorem1a_value(p);
        rep.rows.push_back({instance(p), exact == formula,
                            "exact=" + std::to_string(exact) + " formula=" + std::to_string(formula)});
      }
  return rep;
}

SuiteReport suite_spo() {
  SuiteReport rep{"spo", {}};
  for (int k = 2; k <= 4; ++k) {
    int checked = 0;
    for (int n = k - 1; n <= 40; ++n)
      for (int b : large_b_values(n, k)) {
        Params p{n, k, b};
        auto value = bandwidth_of_numbering(spo_numbering(p));
        auto formula = central_lower_bound(p);
        ++checked;
        if (value != formula)
          rep.rows.push_back({instance(p), false,
                              "spo=" + std::to_string(value) + " ceil((|V|+|C|-2)/2)=" + std::to_string(formula)});
      }
    rep.rows.push_back({"k=" + std::to_string(k) + " n<=40, 2b>=n+k-1", true, std::to_string(checked) + " instances"});
  }
  return rep;
}

SuiteReport suite_lex_pin() {
  SuiteReport rep{"lex-pin", {}};
  auto pin = [&](int n, int k, int b) {
    Params p{n, k, b};
    auto chv = chvatal_lower_bound(p);
    auto lex = bandwidth_of_numbering(lex_numbering(p));
    auto formula = lex_upper_bound_value(p);
    rep.rows.push_back({instance(p), chv == lex && lex == formula,
                        "chvatal=" + std::to_string(chv) + " lex=" + std::to_string(lex) +
                            " k*C(b,k)=" + std::to_string(formula)});
  };
  for (int n : {50, 100, 200, 400}) pin(n, 2, 3);
  for (int n : {100, 200, 400}) pin(n, 3, 4);
  return rep;
}

SuiteReport suite_distance() {
  SuiteReport rep{"distance", {}};
  int interval_pairs = 0, instances = 0;
  for (int k = 1; k <= 4; ++k)
    for (int n = std::max(1, k - 1); n <= 20; ++n)
      for (int b = std::max(1, k - 1); b <= n; ++b) {
        Params p{n, k, b};
        if (b == k - 1) continue;  // edgeless
        ClassDistances dist(p);
        ++instances;
        bool ok = true;
        std::string detail;
        for (int i = 0; i + k - 1 <= n && ok; ++i) {
          auto row = dist.from(i, i + k - 1);
          for (int j = i + 1; j + k - 1 <= n; ++j) {
            ++interval_pairs;
            int bfs = row[static_cast<std::size_t>(dist.index_of(j, j + k - 1))];
            auto formula = interval_distance(i, j, p);
            if (bfs != formula) {
              ok = false;
              detail = "interval pair i=" + std::to_string(i) + " j=" + std::to_string(j) + ": bfs=" +
                       std::to_string(bfs) + " formula=" + std::to_string(formula);
              break;
            }
          }
        }
        auto ecc = dist.eccentricity_max();
        if (ok && ecc != diameter(p)) {
          ok = false;
          detail = "diameter bfs=" + std::to_string(ecc) + " formula=" + std::to_string(diameter(p));
        }
        if (!ok) rep.rows.push_back({instance(p), false, detail});
      }
  rep.rows.push_back({"k<=4 n<=20: intervals and diameter", true,
                      std::to_string(instances) + " instances, " + std::to_string(interval_pairs) + " interval pairs"});

  std::int64_t pairs = 0;
  for (int k = 1; k <= 3; ++k)
    for (int n = std::max(1, k - 1); n <= 14; ++n)
      for (int b = std::max(1, k - 1); b <= n; ++b) {
        Params p{n, k, b};
        if (b == k - 1) continue;
        ClassDistances dist(p);
        auto vertices = enumerate_vertices(p);
        std::map<std::pair<int, int>, std::vector<int>> rows;
        bool ok = true;
        for (const auto& x : vertices) {
          auto& row = rows[{x.lo(), x.hi()}];
          if (row.empty()) row = dist.from(x.lo(), x.hi());
          for (const auto& y : vertices) {
            if (!(x.lo() < y.lo() || (x.lo() == y.lo() && x.hi() < y.hi()))) continue;
            ++pairs;
            auto bound = distance_upper_bound(x, y, p);
            auto bfs = dist.vertex_distance(row, x, y);
            if (bfs > bound) {
              rep.rows.push_back({instance(p), false, "bound " + std::to_string(bound) + " < distance " +
                                                          std::to_string(bfs)});
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
      }
  rep.rows.push_back({"k<=3 n<=14: distance upper bound dominates", true, std::to_string(pairs) + " ordered pairs"});
  return rep;
}

const std::vector<std::string> kIdentityBetas{"9/20", "7/20", "1/3", "2/5", "1/2", "3/10"};

SuiteReport suite_geometry() {
  SuiteReport rep{"geometry-identities", {}};
  for (const auto& text : kIdentityBetas)
    for (int k = 2; k <= 5; ++k) {
      auto dec = classify_case(parse_rational(text));
      auto report = verify_identities(dec, k);
      std::string failed;
      for (const auto& c : report.checks)
        if (!c.pass) failed += (failed.empty() ? "" : "; ") + c.name + ": " + to_string(c.lhs) + " != " + to_string(c.rhs);
      rep.rows.push_back({instance(dec.beta, k) + " case " + to_string(dec.which), report.all_pass(),
                          failed.empty() ? std::to_string(report.checks.size()) + " identities" : failed});
    }
  return rep;
}

Rational riemann_error(const Polygon& poly, int n, int k) {
  Rational density(region_vertex_count(poly, n, k));
  density /= pow(make_rational(n), static_cast<unsigned>(k));
  return abs_value(density - polygon_measure(poly, k));
}

SuiteReport suite_riemann() {
  SuiteReport rep{"riemann", {}};
  const Rational beta = make_rational(2, 5);
  const std::vector<std::pair<std::string, Polygon>> regions{{"omega", omega_polygon()},
                                                              {"band beta=2/5", band_polygon(beta)}};
  for (const auto& [name, poly] : regions)
    for (int k = 2; k <= 3; ++k) {
      auto e100 = riemann_error(poly, 100, k);
      auto e200 = riemann_error(poly, 200, k);
      // halving with 10% slack
      bool pass = e200 <= make_rational(11, 20) * e100;
      rep.rows.push_back({name + " k=" + std::to_string(k), pass,
                          "err(100)=" + to_decimal(e100, 6) + " err(200)=" + to_decimal(e200, 6)});
    }
  return rep;
}

SuiteReport suite_thm2() {
  SuiteReport rep{"thm2", {}};
  const std::vector<int> ns{80, 160, 320, 640};
  auto ratio_at = [](const Rational& beta, int n, Method m) {
    Rational b = beta * n;
    Params p{n, 2, static_cast<int>(b.get_num().get_si())};
    return make_rational(bandwidth_of_numbering(make_numbering(p, m)), static_cast<long>(n) * n);
  };

  const Rational beta_a = make_rational(9, 20);
  const Rational c1 = coefficients(beta_a, 2).c1;
  Rational previous;
  for (std::size_t t = 0; t < ns.size(); ++t) {
    Rational ratio = ratio_at(beta_a, ns[t], Method::case_a);
    bool pass = t == 0 || ratio < previous;
    std::string detail = "ratio=" + to_decimal(ratio, 8) + " c1=" + to_decimal(c1, 8);
    if (t + 1 == ns.size()) {
      pass = pass && abs_value(ratio - c1) <= c1 / 10;
      detail += " (within 10%)";
    } else if (t > 0) {
      detail += " (decreasing)";
    }
    rep.rows.push_back({"case_a beta=9/20 n=" + std::to_string(ns[t]), pass, detail});
    previous = ratio;
  }

  const Rational beta_b = make_rational(7, 20);
  auto [lower, upper] = theorem2_interval(beta_b, 2);
  for (std::size_t t = 0; t < ns.size(); ++t) {
    Rational ratio = ratio_at(beta_b, ns[t], Method::case_b);
    bool pass = ratio >= lower * make_rational(9, 10);
    std::string detail = "ratio=" + to_decimal(ratio, 8) + " lower=" + to_decimal(lower, 8) +
                         " upper=" + to_decimal(upper, 8);
    if (t + 1 == ns.size()) {
      pass = pass && abs_value(ratio - upper) <= upper / 10;
      detail += " (within 10% of upper)";
    }
    rep.rows.push_back({"case_b beta=7/20 n=" + std::to_string(ns[t]), pass, detail});
  }
  return rep;
}

std::string describe(const Hypergraph& h) {
  std::string s = "m=" + std::to_string(h.vertex_count()) + " edges={";
  for (int i = 0; i < h.edge_count(); ++i) {
    s += i ? " " : "";
    for (std::size_t j = 0; j < h.edge(i).size(); ++j) s += (j ? "," : "") + std::to_string(h.edge(i)[j]);
  }
  return s + "}";
}

SuiteReport suite_prop1(const VerifyOptions& opt) {
  SuiteReport rep{"prop1", {}};
  auto check = [&](const Hypergraph& h) {
    auto v = proposition1_values(h);
    if (!v.equal())
      rep.rows.push_back({describe(h), false,
                          "edge cover " + std::to_string(v.edge_cover) + " vs vertex cover " +
                              std::to_string(v.vertex_cover)});
  };
  auto family = all_small_hypergraphs(4, 2, 3);
  for (const auto& h : family) check(h);
  rep.rows.push_back({"exhaustive, <=4 vertices, sizes 2-3", true, std::to_string(family.size()) + " hypergraphs"});

  std::mt19937_64 rng(opt.seed);
  for (int t = 0; t < opt.random; ++t) {
    int m = uniform_int(rng, 5, 6);
    int edges = uniform_int(rng, 1, 10);
    check(random_hypergraph(m, edges, 2, 3, rng));
  }
  rep.rows.push_back({"random, 5-6 vertices, sizes 2-3", true,
                      std::to_string(opt.random) + " hypergraphs, seed " + std::to_string(opt.seed)});
  return rep;
}

SuiteReport suite_transform() {
  SuiteReport rep{"transform", {}};
  for (int k = 2; k <= 3; ++k)
    for (int n = k - 1; n <= 10; ++n)
      for (int b = std::max(1, k - 1); b <= n; ++b) {
        Params p{n, k, b};
        auto transformed = weak_edge_clique_graph(maximal_banded_hypergraph(p));
        auto direct = explicit_graph(p);
        rep.rows.push_back({instance(p), transformed == direct,
                            std::to_string(transformed.edge_count()) + " vs " + std::to_string(direct.edge_count()) +
                                " edges"});
      }
  return rep;
}

SuiteReport suite_meta(const VerifyOptions& opt) {
  SuiteReport rep{"meta", {}};
  Rational u = unknown_set_measure(10000);
  rep.rows.push_back({"unknown set measure, q<=10^4", u > make_rational(1185, 10000) && u < make_rational(1195, 10000),
                      to_decimal(u, 10) + " (tail <= " + to_string(unknown_set_tail_bound(10000)) + ")"});

  std::mt19937_64 rng(opt.seed);
  int checked = 0;
  Rational worst;
  for (int t = 0; t < 100; ++t) {
    // beta strictly inside (1/(q+1), q/(q^2+q-1)), where case B applies
    long q = uniform_int(rng, 2, 50);
    Rational lo = make_rational(1, q + 1), hi = make_rational(q, q * q + q - 1);
    Rational beta = lo + (hi - lo) * make_rational(uniform_int(rng, 1, 999), 1000);
    int k = uniform_int(rng, 2, 6);
    auto dec = classify_case(beta);
    auto c = coefficients(beta, k);
    Rational ratio = c.c2 / c.c3;
    if (checked == 0 || ratio < worst) worst = ratio;
    ++checked;
    if (dec.which != BetaCase::B || ratio < 6)
      rep.rows.push_back({instance(beta, k), false, "case " + to_string(dec.which) + " c2/c3=" + to_decimal(ratio, 8)});
  }
  rep.rows.push_back({"c2/c3 >= 6 on random case-B betas", true,
                      std::to_string(checked) + " samples, smallest " + to_decimal(worst, 8)});
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm1a", "spo",  "lex-pin", "distance",  "geometry-identities",
                                              "riemann", "thm2", "prop1",  "transform", "meta"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "thm1a") return suite_thm1a();
  if (name == "spo") return suite_spo();
  if (name == "lex-pin") return suite_lex_pin();
  if (name == "distance") return suite_distance();
  if (name == "geometry-identities") return suite_geometry();
  if (name == "riemann") return suite_riemann();
  if (name == "thm2") return suite_thm2();
  if (name == "prop1") return suite_prop1(options);
  if (name == "transform") return suite_transform();
  if (name == "meta") return suite_meta(options);
  throw ArgumentError("unknown suite '" + name + "'");
}

}  // namespace gnkb

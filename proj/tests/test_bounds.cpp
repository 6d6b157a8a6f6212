#include <doctest.h>

#include <random>

#include "gnkb/bounds.hpp"
#include "gnkb/errors.hpp"

using namespace gnkb;

namespace {
Rational R(long p, long q = 1) { return make_rational(p, q); }
}  // namespace

TEST_CASE("case classification") {
  auto a = classify_case(R(9, 20));
  CHECK(a.q == 2);
  CHECK(a.r == R(1, 10));
  CHECK(a.which == BetaCase::A);
  auto b = classify_case(R(7, 20));
  CHECK(b.q == 2);
  CHECK(b.r == R(3, 10));
  CHECK(b.which == BetaCase::B);
  auto h = classify_case(R(1, 2));
  CHECK(h.q == 2);
  CHECK(h.r == 0);
  CHECK(h.which == BetaCase::A);
  auto t = classify_case(R(1, 3));
  CHECK(t.q == 3);
  CHECK(t.r == 0);
  CHECK(a.threshold() == R(1, 5));
  CHECK_THROWS_AS(classify_case(R(0)), RegimeError);
  CHECK_THROWS_AS(classify_case(R(3, 5)), RegimeError);
  CHECK(to_string(BetaCase::A) == "A");
}

TEST_CASE("decomposition invariants on a grid of rationals") {
  for (long den = 2; den <= 60; ++den)
    for (long num = 1; 2 * num <= den; ++num) {
      Rational beta = R(num, den);
      auto d = classify_case(beta);
      CHECK(d.q >= 2);
      CHECK(d.q * beta + d.r == 1);
      CHECK(d.r >= 0);
      CHECK(d.r < beta);
      // A iff A_i lies on or above the band line: q (beta - r) >= beta
      CHECK((d.which == BetaCase::A) == (d.q * (beta - d.r) >= beta));
    }
}

TEST_CASE("dense-regime value and the central bound") {
  CHECK(theorem1a_value({4, 2, 3}) == 5);
  CHECK(theorem1a_value({5, 2, 4}) == 9);
  CHECK(theorem1a_value({7, 3, 7}) == binomial(8, 3) - 1);
  CHECK(central_lower_bound({4, 2, 3}) == 5);
  CHECK(central_lower_bound({2, 2, 2}) == 2);
  CHECK(central_lower_bound({5, 2, 4}) == 9);
  for (int k = 1; k <= 5; ++k)
    for (int n = std::max(1, k - 1); n <= 30; ++n)
      for (int b = std::max(1, k - 1); b <= n; ++b) {
        Params p{n, k, b};
        if (2 * b < n + k - 1) {
          CHECK_THROWS_AS(theorem1a_value(p), RegimeError);
          continue;
        }
        auto v = vertex_count_formula(p) + central_count(p) - 2;
        CHECK(theorem1a_value(p) == (v + 1) / 2);
        CHECK(central_lower_bound(p) == theorem1a_value(p));
      }
  CHECK_THROWS_AS(central_lower_bound({10, 2, 3}), RegimeError);
}

TEST_CASE("lex and chvatal bounds") {
  CHECK(lex_upper_bound_value({9, 2, 3}) == 6);
  CHECK(lex_upper_bound_value({9, 4, 3}) == 0);
  CHECK(lex_upper_bound_value({9, 3, 4}) == 12);
  CHECK(chvatal_lower_bound({10, 2, 3}) == 6);
  CHECK(chvatal_lower_bound({200, 2, 3}) == 6);
  CHECK(chvatal_lower_bound({8, 3, 8}) == vertex_count_formula({8, 3, 8}) - 1);
  CHECK(chvatal_lower_bound({5, 3, 2}) == 0);
}

TEST_CASE("asymptotic coefficients") {
  CHECK(coefficients(R(9, 20), 2).c1 == R(243, 1600));
  auto b = coefficients(R(7, 20), 2);
  CHECK(b.c2 == R(77, 800));
  CHECK(b.c3 == R(1, 1200));
  CHECK(b.c2 / b.c3 == R(231, 2));
  CHECK(b.gamma == R(7, 40));
  CHECK(coefficients(R(1, 2), 2).c1 == R(3, 16));
  CHECK_THROWS_AS(coefficients(R(1, 3), 1), RegimeError);

  auto [alo, ahi] = theorem2_interval(R(9, 20), 2);
  CHECK(alo == R(243, 1600));
  CHECK(ahi == R(243, 1600));
  auto [blo, bhi] = theorem2_interval(R(7, 20), 2);
  CHECK(blo == R(29, 300));
  CHECK(bhi == R(233, 2400));
}

TEST_CASE("coefficients are positive, ordered, and c2/c3 >= 6 in case B") {
  std::mt19937_64 rng(3);
  int case_b = 0;
  for (int t = 0; t < 400; ++t) {
    long den = 3 + static_cast<long>(rng() % 500);
    long num = 1 + static_cast<long>(rng() % static_cast<unsigned long>(den / 2));
    Rational beta = R(num, den);
    int k = 2 + static_cast<int>(rng() % 5);
    auto d = classify_case(beta);
    auto c = coefficients(beta, k);
    CHECK(c.c1 > 0);
    CHECK(c.c2 > 0);
    CHECK(c.c3 >= 0);
    auto [lo, hi] = theorem2_interval(beta, k);
    CHECK(lo <= hi);
    if (d.which == BetaCase::B) {
      ++case_b;
      CHECK(c.c3 > 0);
      CHECK(c.c2 / c.c3 >= 6);
      CHECK(lo < hi);
    } else {
      CHECK(lo == hi);
    }
  }
  CHECK(case_b > 20);
}

TEST_CASE("unknown set measure") {
  CHECK(unknown_set_measure(2) == R(1, 15));
  CHECK(unknown_set_measure(3) == R(1, 15) + R(1, 44));
  CHECK_THROWS_AS(unknown_set_measure(1), ParameterError);
  Rational prev = unknown_set_measure(2);
  for (long q = 3; q <= 40; ++q) {
    Rational cur = unknown_set_measure(q);
    CHECK(cur > prev);
    prev = cur;
  }
  Rational u100 = unknown_set_measure(100);
  Rational u4 = unknown_set_measure(10000);
  CHECK(u4 > u100);
  CHECK(u100 + unknown_set_tail_bound(100) >= u4);
  // floating-point partial sum as an independent estimate
  double s = 0;
  for (long q = 2; q <= 10000; ++q) s += static_cast<double>(q) / (q * q + q - 1.0) - 1.0 / (q + 1.0);
  CHECK(u4.get_d() == doctest::Approx(s).epsilon(1e-12));
  CHECK(u4 > R(1185, 10000));
  CHECK(u4 < R(1195, 10000));
}

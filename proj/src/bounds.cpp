#include "gnkb/bounds.hpp"

#include <algorithm>

#include "gnkb/errors.hpp"

namespace gnkb {

std::string to_string(BetaCase c) { return c == BetaCase::A ? "A" : "B"; }

Rational BetaDecomposition::threshold() const { return Rational(q - 1, q * q + q - 1); }

BetaDecomposition classify_case(const Rational& beta) {
  if (beta <= 0 || beta > Rational(1, 2))
    throw RegimeError("beta must lie in (0, 1/2], got " + to_string(beta));
  BetaDecomposition d;
  d.beta = beta;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), beta.get_den().get_mpz_t(), beta.get_num().get_mpz_t());
  d.q = q.get_si();
  d.r = 1 - d.q * beta;
  if (d.r < 0 || d.r >= beta || d.q < 2) throw std::logic_error("beta decomposition invariant broken");
  d.which = d.r <= d.threshold() ? BetaCase::A : BetaCase::B;
  return d;
}

std::int64_t theorem1a_value(const Params& p) {
  p.validate();
  if (2 * p.b < p.n + p.k - 1) throw RegimeError("the dense-regime value needs 2b >= n + k - 1");
  std::int64_t numerator = (p.n + 1) * binomial(p.b, p.k - 1) - (p.k - 1) * binomial(p.b + 1, p.k) +
                           binomial(2 * static_cast<std::int64_t>(p.b) - p.n + 1, p.k) - 2;
  return ceil_div(numerator, 2);
}

std::int64_t central_lower_bound(const Params& p) {
  std::int64_t c = central_count(p);
  if (c == 0) throw RegimeError("central set is empty (needs 2b >= n + k - 1)");
  return ceil_div(vertex_count_formula(p) + c - 2, 2);
}

std::int64_t lex_upper_bound_value(const Params& p) {
  p.validate();
  return p.k * binomial(p.b, p.k);
}

std::int64_t chvatal_lower_bound(const Params& p) {
  p.validate();
  std::int64_t vertices = vertex_count_formula(p);
  if (p.b == p.k - 1) return 0;
  return ceil_div(vertices - 1, diameter(p));
}

Coefficients coefficients(const Rational& beta, int k) {
  if (k < 2) throw RegimeError("asymptotic coefficients need k >= 2");
  auto d = classify_case(beta);
  Rational kf(factorial(static_cast<unsigned>(k)));
  Rational q(d.q);
  Coefficients c;
  c.c1 = pow(beta, static_cast<unsigned>(k)) / kf * (k - Rational(k - 1) / q);
  c.c2 = pow(beta, static_cast<unsigned>(k - 1)) / ((q + 1) * kf) * (k - (k - 1) * beta);
  c.c3 = pow(beta - d.r, static_cast<unsigned>(k)) / ((q + 1) * kf) * pow(q, static_cast<unsigned>(k - 1));
  c.gamma = beta * (1 - 1 / q);
  c.c1.canonicalize();
  c.c2.canonicalize();
  c.c3.canonicalize();
  c.gamma.canonicalize();
  return c;
}

std::pair<Rational, Rational> theorem2_interval(const Rational& beta, int k) {
  auto c = coefficients(beta, k);
  auto d = classify_case(beta);
  if (d.which == BetaCase::A) return {c.c1, c.c1};
  Rational lower = std::max(c.c1, Rational(c.c2 + c.c3 / pow(Rational(d.q), static_cast<unsigned>(k - 1))));
  Rational upper = c.c2 + c.c3;
  return {lower, upper};
}

namespace {

// Each summand simplifies to 1 / ((q^2 + q - 1)(q + 1)). Sum by binary
// splitting on unreduced fractions; reduce once at the end.
void split_sum(long lo, long hi, BigInt& num, BigInt& den) {
  if (lo == hi) {
    num = 1;
    den = BigInt(lo * lo + lo - 1) * BigInt(lo + 1);
    return;
  }
  long mid = lo + (hi - lo) / 2;
  BigInt n1, d1, n2, d2;
  split_sum(lo, mid, n1, d1);
  split_sum(mid + 1, hi, n2, d2);
  num = n1 * d2 + n2 * d1;
  den = d1 * d2;
}

}  // namespace

Rational unknown_set_measure(long q_max) {
  if (q_max < 2) throw ParameterError("q_max must be at least 2");
  BigInt num, den;
  split_sum(2, q_max, num, den);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational unknown_set_tail_bound(long q_max) {
  if (q_max < 2) throw ParameterError("q_max must be at least 2");
  return Rational(1, q_max);
}

}  // namespace gnkb

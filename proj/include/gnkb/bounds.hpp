#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "gnkb/core_graph.hpp"
#include "gnkb/rational.hpp"

namespace gnkb {

enum class BetaCase { A, B };

std::string to_string(BetaCase c);

/// 1 = q * beta + r with integer q >= 2 and 0 <= r < beta.
struct BetaDecomposition {
  Rational beta;
  long q = 0;
  Rational r;
  BetaCase which = BetaCase::A;

  /// (q - 1) / (q^2 + q - 1)
  Rational threshold() const;
};

/// Leading coefficients of n^k for b = beta n.
struct Coefficients {
  Rational c1, c2, c3;
  Rational gamma;  ///< beta * (1 - 1/q)
};

/// Throws RegimeError unless 0 < beta <= 1/2.
BetaDecomposition classify_case(const Rational& beta);

/// Exact bandwidth for 2b >= n + k - 1, from the closed form in n, k, b.
std::int64_t theorem1a_value(const Params& p);

/// ceil((|V| + |C| - 2) / 2), from the vertex and central counts.
std::int64_t central_lower_bound(const Params& p);

/// k * C(b, k).
std::int64_t lex_upper_bound_value(const Params& p);

/// ceil((|V| - 1) / diam). Zero for the edgeless case b = k - 1.
std::int64_t chvatal_lower_bound(const Params& p);

Coefficients coefficients(const Rational& beta, int k);

/// (lower, upper) asymptotic coefficients of n^k.
std::pair<Rational, Rational> theorem2_interval(const Rational& beta, int k);

/// Partial sum over q = 2..q_max of q/(q^2+q-1) - 1/(q+1).
Rational unknown_set_measure(long q_max);

/// Upper bound on the omitted tail, sum_{q > q_max} 1/q^2 <= 1/q_max.
Rational unknown_set_tail_bound(long q_max);

}  // namespace gnkb

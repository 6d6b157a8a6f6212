#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gnkb/bounds.hpp"
#include "gnkb/rational.hpp"

namespace gnkb {

struct RatPoint {
  Rational x, y;

  friend bool operator==(const RatPoint& a, const RatPoint& b) { return a.x == b.x && a.y == b.y; }
};

/// Cyclic list of vertices; either orientation is accepted.
struct Polygon {
  std::vector<RatPoint> vertices;
};

/// True iff 0 <= x <= y <= 1.
bool in_omega(const RatPoint& p);

/// Twice the signed area (positive for counter-clockwise).
Rational signed_double_area(const Polygon& poly);

/// Euclidean area by the shoelace formula.
Rational shoelace_area(const Polygon& poly);

/// Sign of the cross product (b - a) x (c - a).
int orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c);

/// Closed-segment membership.
bool on_segment(const RatPoint& p, const RatPoint& a, const RatPoint& b);

/// Closed polygon membership (boundary included).
bool contains_closed(const Polygon& poly, const RatPoint& p);

/// Ear-clipping triangulation of a simple polygon after dropping repeated and
/// collinear vertices. Degenerate (zero-area) input yields no triangles.
/// Throws GeometryError for self-intersecting input.
std::vector<std::array<RatPoint, 3>> triangulate(const Polygon& poly);

/// mu(P) = 1/(k-2)! * integral over P of (y - x)^(k-2).
/// Throws GeometryError when P leaves Omega or self-intersects.
Rational polygon_measure(const Polygon& poly, int k);

/// Closed form for the quadrilateral P1 P2 P4 P3 with P1, P2 on y = x + s,
/// P3, P4 on y = x + t, and x-extents u = x(P2) - x(P1), v = x(P4) - x(P3).
Rational trapezoid_measure(const Rational& s, const Rational& t, const Rational& u, const Rational& v, int k);

/// Named points of the crucial polygons for a beta decomposition.
class CrucialPoints {
 public:
  explicit CrucialPoints(const BetaDecomposition& dec);

  const BetaDecomposition& decomposition() const noexcept { return dec_; }
  long q() const noexcept { return dec_.q; }
  const Rational& gamma() const noexcept { return gamma_; }

  /// i = 0..q+1 (A_0 and A_{q+1} are the extended points on the same line).
  RatPoint A(long i) const;
  /// i = 1..q+1 (B_{q+1} = (1, 1)).
  RatPoint B(long i) const;
  /// i = 0..q.
  RatPoint C(long i) const;
  /// Case A: i = 1..q+1. Both cases: i = q+1 (= G_{q+1}).
  RatPoint D(long i) const;
  /// Case A: i = 0..q. Both cases: i = q (on y = q beta).
  RatPoint E(long i) const;
  /// i = 0..q+1.
  RatPoint F(long i) const;
  /// i = 0..q+1.
  RatPoint G(long i) const;
  RatPoint H1() const;
  RatPoint I() const;

 private:
  void check_range(const char* name, long i, long lo, long hi) const;

  BetaDecomposition dec_;
  Rational gamma_;
  Rational h_;  // q (beta - r): offset of the line through the A_i
};

struct IdentityCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

struct IdentityReport {
  BetaDecomposition decomposition;
  int k = 0;
  std::vector<IdentityCheck> checks;

  bool all_pass() const;
};

/// Evaluates every measure identity of the crucial polygons applicable to
/// the decomposition's case with polygon_measure, against the coefficients.
IdentityReport verify_identities(const BetaDecomposition& dec, int k);

/// sum over lattice points (i, j) with (i/n, j/n) in P of C(j - i - 1, k - 2).
/// `open_interior` counts strictly interior points only.
std::int64_t region_vertex_count(const Polygon& poly, int n, int k, bool open_interior = false);

/// {(x, y) in Omega : y <= x + beta}.
Polygon band_polygon(const Rational& beta);
Polygon omega_polygon();

}  // namespace gnkb

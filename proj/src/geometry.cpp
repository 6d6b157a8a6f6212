#include "gnkb/geometry.hpp"

#include <algorithm>
#include <limits>

#include "gnkb/core_graph.hpp"
#include "gnkb/errors.hpp"

namespace gnkb {

bool in_omega(const RatPoint& p) { return 0 <= p.x && p.x <= p.y && p.y <= 1; }

Rational signed_double_area(const Polygon& poly) {
  Rational twice;
  const auto& v = poly.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice;
}

Rational shoelace_area(const Polygon& poly) {
  Rational a = signed_double_area(poly) / 2;
  return abs(a);
}

int orientation(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
  Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(cross);
}

bool on_segment(const RatPoint& p, const RatPoint& a, const RatPoint& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

namespace {

// Crossing-number membership over an exact coordinate type. IntPoint-style
// coordinates use a wider product type W to avoid overflow.
template <typename T, typename W>
bool contains_closed_impl(const std::vector<std::pair<T, T>>& v, T px, T py, bool* on_boundary) {
  bool inside = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto [ax, ay] = v[i];
    auto [bx, by] = v[(i + 1) % v.size()];
    W cross = W(bx - ax) * W(py - ay) - W(by - ay) * W(px - ax);
    if (cross == 0 && std::min(ax, bx) <= px && px <= std::max(ax, bx) && std::min(ay, by) <= py &&
        py <= std::max(ay, by)) {
      if (on_boundary) *on_boundary = true;
      return true;
    }
    if ((ay > py) != (by > py)) {
      // px < intersection x  <=>  sign depends on edge direction
      bool upward = by > ay;
      if (upward ? cross > 0 : cross < 0) inside = !inside;
    }
  }
  if (on_boundary) *on_boundary = false;
  return inside;
}

std::vector<std::pair<Rational, Rational>> as_pairs(const Polygon& poly) {
  std::vector<std::pair<Rational, Rational>> v;
  v.reserve(poly.vertices.size());
  for (const auto& p : poly.vertices) v.emplace_back(p.x, p.y);
  return v;
}

bool segments_intersect(const RatPoint& a, const RatPoint& b, const RatPoint& c, const RatPoint& d) {
  int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

std::vector<RatPoint> cleaned(const std::vector<RatPoint>& input) {
  std::vector<RatPoint> v;
  for (const auto& p : input)
    if (v.empty() || !(v.back() == p)) v.push_back(p);
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
      const auto& prev = v[(i + v.size() - 1) % v.size()];
      const auto& next = v[(i + 1) % v.size()];
      if (orientation(prev, v[i], next) == 0) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (v.size() < 3) v.clear();
  return v;
}

bool in_closed_triangle(const RatPoint& p, const RatPoint& a, const RatPoint& b, const RatPoint& c) {
  int o1 = orientation(a, b, p), o2 = orientation(b, c, p), o3 = orientation(c, a, p);
  return o1 >= 0 && o2 >= 0 && o3 >= 0;
}

}  // namespace

bool contains_closed(const Polygon& poly, const RatPoint& p) {
  if (poly.vertices.empty()) return false;
  if (poly.vertices.size() < 3) {
    for (std::size_t i = 0; i < poly.vertices.size(); ++i)
      if (on_segment(p, poly.vertices[i], poly.vertices[(i + 1) % poly.vertices.size()])) return true;
    return false;
  }
  return contains_closed_impl<Rational, Rational>(as_pairs(poly), p.x, p.y, nullptr);
}

std::vector<std::array<RatPoint, 3>> triangulate(const Polygon& poly) {
  auto v = cleaned(poly.vertices);
  std::vector<std::array<RatPoint, 3>> out;
  if (v.empty()) return out;

  const std::size_t m = v.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      bool adjacent = j == i + 1 || (i == 0 && j == m - 1);
      if (adjacent) continue;
      if (segments_intersect(v[i], v[(i + 1) % m], v[j], v[(j + 1) % m]))
        throw GeometryError("polygon is not simple");
    }
  Polygon tmp{v};
  Rational area = signed_double_area(tmp);
  if (area == 0) throw GeometryError("polygon encloses no area");
  if (area < 0) std::reverse(v.begin(), v.end());

  while (v.size() > 3) {
    bool clipped = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::size_t n = v.size();
      const auto& prev = v[(i + n - 1) % n];
      const auto& cur = v[i];
      const auto& next = v[(i + 1) % n];
      int turn = orientation(prev, cur, next);
      if (turn == 0) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        clipped = true;
        break;
      }
      if (turn < 0) continue;
      bool blocked = false;
      for (std::size_t j = 0; j < n && !blocked; ++j) {
        if (j == i || j == (i + 1) % n || j == (i + n - 1) % n) continue;
        if (v[j] == prev || v[j] == next || v[j] == cur) continue;
        blocked = in_closed_triangle(v[j], prev, cur, next);
      }
      if (blocked) continue;
      out.push_back({prev, cur, next});
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
      break;
    }
    if (!clipped) throw GeometryError("no ear found; polygon is not simple");
  }
  if (orientation(v[0], v[1], v[2]) > 0) out.push_back({v[0], v[1], v[2]});
  return out;
}

namespace {

// 1/m! times the integral of (y - x)^m over a triangle, by the barycentric
// monomial formula: integral of l0^a l1^b l2^c = 2|T| a! b! c! / (a+b+c+2)!.
Rational triangle_measure(const std::array<RatPoint, 3>& t, int m) {
  Rational doubled = abs((t[1].x - t[0].x) * (t[2].y - t[0].y) - (t[1].y - t[0].y) * (t[2].x - t[0].x));
  Rational l0 = t[0].y - t[0].x, l1 = t[1].y - t[1].x, l2 = t[2].y - t[2].x;
  Rational h;  // complete homogeneous symmetric polynomial of degree m
  for (int a = 0; a <= m; ++a)
    for (int b = 0; a + b <= m; ++b)
      h += pow(l0, static_cast<unsigned>(a)) * pow(l1, static_cast<unsigned>(b)) *
           pow(l2, static_cast<unsigned>(m - a - b));
  Rational r = doubled * h / Rational(factorial(static_cast<unsigned>(m + 2)));
  r.canonicalize();
  return r;
}

}  // namespace

Rational polygon_measure(const Polygon& poly, int k) {
  if (k < 2) throw ParameterError("polygon measure needs k >= 2");
  for (const auto& p : poly.vertices)
    if (!in_omega(p)) throw GeometryError("polygon vertex (" + to_string(p.x) + ", " + to_string(p.y) +
                                          ") lies outside 0 <= x <= y <= 1");
  Rational total;
  for (const auto& t : triangulate(poly)) total += triangle_measure(t, k - 2);
  total.canonicalize();
  return total;
}

Rational trapezoid_measure(const Rational& s, const Rational& t, const Rational& u, const Rational& v, int k) {
  if (k < 2) throw ParameterError("trapezoid measure needs k >= 2");
  if (!(s < t)) throw ArgumentError("trapezoid measure needs s < t");
  if (s < 0 || t > 1) throw ArgumentError("trapezoid offsets must lie in [0, 1]");
  if (u < 0 || v < 0) throw ArgumentError("trapezoid side lengths must be non-negative");
  const auto ku = static_cast<unsigned>(k);
  Rational first = (v - u) * (pow(t, ku) - pow(s, ku)) / k;
  Rational second = (t * u - s * v) * (pow(t, ku - 1) - pow(s, ku - 1)) / (k - 1);
  Rational r = (first + second) / (t - s) / Rational(factorial(ku - 2));
  r.canonicalize();
  return r;
}

CrucialPoints::CrucialPoints(const BetaDecomposition& dec) : dec_(dec) {
  gamma_ = dec_.beta * (1 - Rational(1, dec_.q));
  h_ = dec_.q * (dec_.beta - dec_.r);
  gamma_.canonicalize();
  h_.canonicalize();
}

void CrucialPoints::check_range(const char* name, long i, long lo, long hi) const {
  if (i < lo || i > hi)
    throw ArgumentError(std::string("point ") + name + "_" + std::to_string(i) + " is not defined");
}

RatPoint CrucialPoints::A(long i) const {
  check_range("A", i, 0, q() + 1);
  Rational x = i * dec_.r;
  return {x, x + h_};
}

RatPoint CrucialPoints::B(long i) const {
  check_range("B", i, 1, q() + 1);
  Rational x = dec_.r - dec_.beta + i * dec_.beta;
  return {x, x};
}

RatPoint CrucialPoints::C(long i) const {
  check_range("C", i, 0, q());
  Rational x = i * dec_.beta;
  return {x, x};
}

RatPoint CrucialPoints::D(long i) const {
  check_range("D", i, 1, q() + 1);
  if (dec_.which != BetaCase::A && i != q() + 1)
    throw RegimeError("D_" + std::to_string(i) + " is only defined in case A");
  Rational x = dec_.r + (i - 1) * gamma_;
  return {x, x + dec_.beta};
}

RatPoint CrucialPoints::E(long i) const {
  check_range("E", i, 0, q());
  if (dec_.which != BetaCase::A && i != q())
    throw RegimeError("E_" + std::to_string(i) + " is only defined in case A");
  Rational x = i * gamma_;
  return {x, x + dec_.beta};
}

RatPoint CrucialPoints::F(long i) const {
  check_range("F", i, 0, q() + 1);
  Rational x(i, q() + 1);
  x.canonicalize();
  return {x, x};
}

RatPoint CrucialPoints::G(long i) const {
  check_range("G", i, 0, q() + 1);
  Rational x = i * (1 - dec_.beta) / (q() + 1);
  return {x, x + dec_.beta};
}

RatPoint CrucialPoints::H1() const { return {dec_.r, dec_.beta}; }

RatPoint CrucialPoints::I() const { return {Rational(0), Rational(1)}; }

bool IdentityReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

IdentityReport verify_identities(const BetaDecomposition& dec, int k) {
  if (k < 2) throw ParameterError("identities need k >= 2");
  const CrucialPoints pts(dec);
  const auto c = coefficients(dec.beta, k);
  const long q = dec.q;
  const auto ku = static_cast<unsigned>(k);
  const Rational kfact(factorial(ku));
  const Rational qk1 = pow(Rational(q), ku - 1);

  IdentityReport report{dec, k, {}};
  auto check = [&](std::string name, std::initializer_list<RatPoint> poly, const Rational& rhs) {
    Rational lhs = polygon_measure(Polygon{std::vector<RatPoint>(poly)}, k);
    report.checks.push_back({std::move(name), lhs, rhs, lhs == rhs});
  };
  auto idx = [](const char* base, long i) { return std::string(base) + std::to_string(i); };

  check("mu(F0 F_{q+1} G_{q+1} G0) = beta^(k-1)/k! (k-(k-1)beta)",
        {pts.F(0), pts.F(q + 1), pts.G(q + 1), pts.G(0)},
        pow(dec.beta, ku - 1) / kfact * (k - (k - 1) * dec.beta));
  check("mu(F0 F_{q+1} G_{q+1} G0) = (q+1) c2", {pts.F(0), pts.F(q + 1), pts.G(q + 1), pts.G(0)}, (q + 1) * c.c2);
  for (long i = 0; i <= q; ++i)
    check("mu(" + idx("F", i) + " " + idx("F", i + 1) + " " + idx("G", i + 1) + " " + idx("G", i) + ") = c2",
          {pts.F(i), pts.F(i + 1), pts.G(i + 1), pts.G(i)}, c.c2);
  for (long i = 1; i <= q; ++i) {
    check("mu(" + idx("A", i) + " " + idx("B", i) + " " + idx("C", i) + ") = (beta-r)^k q^(k-1)/k!",
          {pts.A(i), pts.B(i), pts.C(i)}, pow(dec.beta - dec.r, ku) / kfact * qk1);
    check("mu(" + idx("A", i) + " " + idx("B", i) + " " + idx("C", i) + ") = (q+1) c3",
          {pts.A(i), pts.B(i), pts.C(i)}, (q + 1) * c.c3);
    check("mu(" + idx("A", i) + " " + idx("B", i) + " " + idx("F", i) + ") = (q+1-i) c3",
          {pts.A(i), pts.B(i), pts.F(i)}, (q + 1 - i) * c.c3);
    check("mu(" + idx("A", i) + " " + idx("F", i) + " " + idx("C", i) + ") = i c3",
          {pts.A(i), pts.F(i), pts.C(i)}, i * c.c3);
  }
  check("mu(B1 C1 H1) = (q+1)/q^(k-1) c3", {pts.B(1), pts.C(1), pts.H1()}, (q + 1) * c.c3 / qk1);
  check("mu(C_q B_{q+1} D_{q+1} E_q) = (q+1) c2 - q c1", {pts.C(q), pts.B(q + 1), pts.D(q + 1), pts.E(q)},
        (q + 1) * c.c2 - q * c.c1);
  check("mu(F0 C_q E_q G0) = q c1", {pts.F(0), pts.C(q), pts.E(q), pts.G(0)}, q * c.c1);

  if (dec.which == BetaCase::A) {
    const Rational km1fact(factorial(ku - 1));
    for (long i = 0; i <= q; ++i) {
      std::string poly = idx("C", i) + " " + idx("B", i + 1) + " " + idx("D", i + 1) + " " + idx("E", i);
      check("mu(" + poly + ") = beta^(k-1) r/(k-1)!", {pts.C(i), pts.B(i + 1), pts.D(i + 1), pts.E(i)},
            pow(dec.beta, ku - 1) * dec.r / km1fact);
      check("mu(" + poly + ") = (q+1) c2 - q c1", {pts.C(i), pts.B(i + 1), pts.D(i + 1), pts.E(i)},
            (q + 1) * c.c2 - q * c.c1);
    }
    for (long i = 1; i <= q; ++i) {
      std::string poly = idx("B", i) + " " + idx("C", i) + " " + idx("E", i) + " " + idx("D", i);
      check("mu(" + poly + ") = beta^(k-1)/k! (k(beta-r) - beta(k-1)/q)",
            {pts.B(i), pts.C(i), pts.E(i), pts.D(i)},
            pow(dec.beta, ku - 1) / kfact * (k * (dec.beta - dec.r) - dec.beta * (k - 1) / Rational(q)));
      check("mu(" + poly + ") = (q+1)(c1 - c2)", {pts.B(i), pts.C(i), pts.E(i), pts.D(i)},
            (q + 1) * (c.c1 - c.c2));
      Rational chain = polygon_measure(Polygon{{pts.B(i), pts.C(i), pts.E(i), pts.D(i)}}, k) +
                       polygon_measure(Polygon{{pts.C(i), pts.B(i + 1), pts.D(i + 1), pts.E(i)}}, k);
      report.checks.push_back({"mu(" + poly + ") + mu(" + idx("C", i) + " " + idx("B", i + 1) + " " +
                                   idx("D", i + 1) + " " + idx("E", i) + ") = c1",
                               chain, c.c1, chain == c.c1});
      check("mu(" + idx("B", i) + " " + idx("B", i + 1) + " " + idx("D", i + 1) + " " + idx("D", i) + ") = c1",
            {pts.B(i), pts.B(i + 1), pts.D(i + 1), pts.D(i)}, c.c1);
    }
    for (long i = 0; i < q; ++i)
      check("mu(" + idx("C", i) + " " + idx("C", i + 1) + " " + idx("E", i + 1) + " " + idx("E", i) + ") = c1",
            {pts.C(i), pts.C(i + 1), pts.E(i + 1), pts.E(i)}, c.c1);
  } else {
    for (long i = 0; i < q; ++i) {
      Rational chain = polygon_measure(Polygon{{pts.F(i), pts.F(i + 1), pts.G(i + 1), pts.G(i)}}, k) +
                       polygon_measure(Polygon{{pts.A(i + 1), pts.F(i + 1), pts.C(i + 1)}}, k) -
                       polygon_measure(Polygon{{pts.A(i), pts.F(i), pts.C(i)}}, k);
      report.checks.push_back({"mu(" + idx("F", i) + " " + idx("F", i + 1) + " " + idx("G", i + 1) + " " +
                                   idx("G", i) + ") + mu(" + idx("A", i + 1) + " " + idx("F", i + 1) + " " +
                                   idx("C", i + 1) + ") - mu(" + idx("A", i) + " " + idx("F", i) + " " +
                                   idx("C", i) + ") = c2 + c3",
                               chain, c.c2 + c.c3, chain == c.c2 + c.c3});
    }
  }
  for (auto& ch : report.checks) {
    ch.lhs.canonicalize();
    ch.rhs.canonicalize();
    ch.pass = ch.lhs == ch.rhs;
  }
  return report;
}

std::int64_t region_vertex_count(const Polygon& poly, int n, int k, bool open_interior) {
  if (k < 2) throw ParameterError("region counting needs k >= 2");
  if (n < 1) throw ParameterError("n must be positive");
  for (const auto& p : poly.vertices)
    if (!in_omega(p)) throw GeometryError("polygon leaves 0 <= x <= y <= 1");
  if (poly.vertices.empty()) return 0;

  // Scale to integers: vertex * n * L with L the lcm of all denominators.
  BigInt lcm = 1;
  for (const auto& p : poly.vertices) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.x.get_den().get_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.y.get_den().get_mpz_t());
  }
  BigInt limit = BigInt(1) << 60;
  if (lcm * n * 4 >= limit) throw CapacityError("polygon coordinates too fine for lattice counting");
  const std::int64_t scale = lcm.get_si();
  std::vector<std::pair<std::int64_t, std::int64_t>> v;
  std::int64_t min_x = std::numeric_limits<std::int64_t>::max(), max_x = -1, min_y = min_x, max_y = -1;
  for (const auto& p : poly.vertices) {
    Rational sx = p.x * n * scale, sy = p.y * n * scale;
    v.emplace_back(sx.get_num().get_si(), sy.get_num().get_si());
    min_x = std::min(min_x, v.back().first);
    max_x = std::max(max_x, v.back().first);
    min_y = std::min(min_y, v.back().second);
    max_y = std::max(max_y, v.back().second);
  }
  if (v.size() < 3) v.push_back(v.front());  // keep segment polygons closed

  auto ceil_scaled = [&](std::int64_t c) { return static_cast<int>(ceil_div(c, scale)); };
  std::int64_t total = 0;
  for (int i = std::max(0, ceil_scaled(min_x)); i <= std::min<std::int64_t>(n, max_x / scale); ++i)
    for (int j = std::max(i, ceil_scaled(min_y)); j <= std::min<std::int64_t>(n, max_y / scale); ++j) {
      std::int64_t weight = binomial(j - i - 1, k - 2);
      if (weight == 0) continue;
      bool boundary = false;
      bool in = contains_closed_impl<std::int64_t, __int128>(v, i * scale, j * scale, &boundary);
      if (in && !(open_interior && boundary)) total += weight;
    }
  return total;
}

Polygon band_polygon(const Rational& beta) {
  if (beta <= 0 || beta > 1) throw ParameterError("band width must lie in (0, 1]");
  return Polygon{{{Rational(0), Rational(0)},
                  {Rational(1), Rational(1)},
                  {1 - beta, Rational(1)},
                  {Rational(0), beta}}};
}

Polygon omega_polygon() {
  return Polygon{{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(0), Rational(1)}}};
}

}  // namespace gnkb

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gnkb/errors.hpp"
#include "gnkb/numbering.hpp"

namespace gnkb {

namespace {

using i128 = __int128;

i128 cross(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
  return static_cast<i128>(ax) * by - static_cast<i128>(ay) * bx;
}

}  // namespace

PolygonOrdering::PolygonOrdering(const Params& p) : params_(p) {
  p.validate();
  if (2 * p.b > p.n) throw RegimeError("polygon orderings need b/n <= 1/2");
  dec_ = classify_case(make_rational(p.b, p.n));
  const std::int64_t n = p.n, b = p.b, q = dec_.q;
  scale_ = q * (q + 1);
  rem_ = n - q * b;
  h_ = q * (b - rem_);
  const std::int64_t S = scale_;

  auto A = [&](std::int64_t i) { return IPoint{i * rem_ * S, (i * rem_ + h_) * S}; };
  auto B = [&](std::int64_t i) { auto t = (rem_ - b + i * b) * S; return IPoint{t, t}; };
  auto C = [&](std::int64_t i) { auto t = i * b * S; return IPoint{t, t}; };
  auto D = [&](std::int64_t i) {
    auto x = rem_ * S + (i - 1) * b * (q - 1) * (q + 1);
    return IPoint{x, x + b * S};
  };
  auto E = [&](std::int64_t i) { auto x = i * b * (q - 1) * (q + 1); return IPoint{x, x + b * S}; };
  auto G = [&](std::int64_t i) { auto x = i * (n - b) * q; return IPoint{x, x + b * S}; };

  using Kind = Block::Kind;
  if (dec_.which == BetaCase::A) {
    for (std::int64_t i = 0; i <= q; ++i) {
      if (i > 0)
        blocks_.push_back({"T" + std::to_string(i), {B(i), C(i), E(i), D(i)}, {{C(i), E(i)}}, Kind::fan_diagonal, i});
      Block quad{"Q" + std::to_string(i), {C(i), B(i + 1), D(i + 1), E(i)}, {}, Kind::strip, i};
      if (i < q) quad.deleted.push_back({B(i + 1), D(i + 1)});
      blocks_.push_back(std::move(quad));
    }
  } else {
    for (std::int64_t i = 0; i <= q; ++i) {
      if (i > 0) blocks_.push_back({"Tr" + std::to_string(i), {A(i), B(i), C(i)}, {{A(i), C(i)}}, Kind::fan_diagonal, i});
      Block hex{"Hx" + std::to_string(i), {C(i), B(i + 1), A(i + 1), G(i + 1), G(i), A(i)}, {}, Kind::hexagon, i};
      if (i < q) {
        hex.deleted.push_back({A(i + 1), B(i + 1)});
        hex.deleted.push_back({A(i + 1), G(i + 1)});
      }
      blocks_.push_back(std::move(hex));
    }
  }
}

bool PolygonOrdering::owns(const Block& block, IPoint pt) const {
  auto on_seg = [](IPoint a, IPoint c, IPoint x) {
    if (cross(c.x - a.x, c.y - a.y, x.x - a.x, x.y - a.y) != 0) return false;
    return std::min(a.x, c.x) <= x.x && x.x <= std::max(a.x, c.x) && std::min(a.y, c.y) <= x.y &&
           x.y <= std::max(a.y, c.y);
  };
  for (const auto& [a, c] : block.deleted)
    if (on_seg(a, c, pt)) return false;

  const auto& poly = block.polygon;
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const IPoint& a = poly[j];
    const IPoint& c = poly[i];
    if (on_seg(a, c, pt)) return true;
    if ((a.y > pt.y) != (c.y > pt.y)) {
      // x-coordinate of the edge at pt.y compared against pt.x, kept exact
      i128 lhs = static_cast<i128>(pt.x - a.x) * (c.y - a.y);
      i128 rhs = static_cast<i128>(c.x - a.x) * (pt.y - a.y);
      if ((c.y > a.y) ? lhs < rhs : lhs > rhs) inside = !inside;
    }
  }
  return inside;
}

int PolygonOrdering::block_of(int lo, int hi) const {
  IPoint pt{static_cast<std::int64_t>(lo) * scale_, static_cast<std::int64_t>(hi) * scale_};
  for (std::size_t t = 0; t < blocks_.size(); ++t)
    if (owns(blocks_[t], pt)) return static_cast<int>(t);
  throw std::logic_error("point (" + std::to_string(lo) + ", " + std::to_string(hi) +
                         ") is not covered by any block");
}

PolygonOrdering::Key PolygonOrdering::key(int lo, int hi) const {
  Key k;
  k.block = block_of(lo, hi);
  const Block& blk = blocks_[static_cast<std::size_t>(k.block)];
  const std::int64_t a = lo, c = hi, d = hi - lo, q = dec_.q, i = blk.index, n = params_.n;
  k.spread = d;
  switch (blk.kind) {
    case Block::Kind::strip:
      k.num = (q - i) * a + i * c;
      k.den = q;
      break;
    case Block::Kind::fan_diagonal:
      // where the ray from A_i through the point meets the diagonal
      k.num = h_ * a - i * rem_ * d;
      k.den = h_ - d;
      if (k.den == 0) k.num = a;  // on the level of A_i: sorted after every ray
      break;
    case Block::Kind::hexagon:
      // x-coordinate on the line through the A_i, along the strip below it
      // and along the ray from I above it
      if (d <= h_) {
        k.num = q * a - i * (h_ - d);
        k.den = q;
      } else {
        k.num = a * (n - h_);
        k.den = n - d;
      }
      break;
  }
  return k;
}

int PolygonOrdering::compare(const Key& x, const Key& y) {
  if (x.block != y.block) return x.block < y.block ? -1 : 1;
  const bool xinf = x.den == 0, yinf = y.den == 0;
  if (xinf != yinf) return xinf ? 1 : -1;
  i128 lhs = xinf ? x.num : static_cast<i128>(x.num) * y.den;
  i128 rhs = yinf ? y.num : static_cast<i128>(y.num) * x.den;
  if (lhs != rhs) return lhs < rhs ? -1 : 1;
  if (x.spread != y.spread) return x.spread < y.spread ? -1 : 1;
  return 0;
}

bool PolygonOrdering::less(const Vertex& x, const Vertex& y) const {
  int c = compare(key(x.lo(), x.hi()), key(y.lo(), y.hi()));
  if (c != 0) return c < 0;
  return x < y;
}

namespace {

Numbering polygon_numbering(const Params& p, BetaCase expected, Method method) {
  PolygonOrdering po(p);
  if (po.which() != expected)
    throw RegimeError("b/n = " + std::to_string(p.b) + "/" + std::to_string(p.n) + " is in case " +
                      to_string(po.which()) + ", not case " + to_string(expected));
  auto vertices = std::make_shared<const std::vector<Vertex>>(enumerate_vertices(p));

  // one key per span class; vertices only differ by their tie-break
  const auto w = static_cast<std::size_t>(p.n + 1);
  std::vector<PolygonOrdering::Key> class_key(w * w);
  std::vector<char> known(w * w, 0);
  std::vector<PolygonOrdering::Key> keys(vertices->size());
  for (std::size_t t = 0; t < vertices->size(); ++t) {
    const auto& v = (*vertices)[t];
    auto cell = static_cast<std::size_t>(v.lo()) * w + static_cast<std::size_t>(v.hi());
    if (!known[cell]) {
      class_key[cell] = po.key(v.lo(), v.hi());
      known[cell] = 1;
    }
    keys[t] = class_key[cell];
  }
  std::vector<std::uint32_t> order(vertices->size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    int c = PolygonOrdering::compare(keys[x], keys[y]);
    return c != 0 ? c < 0 : x < y;
  });
  return Numbering::from_order(p, std::move(vertices), order, method);
}

}  // namespace

Numbering case_a_numbering(const Params& p) { return polygon_numbering(p, BetaCase::A, Method::case_a); }
Numbering case_b_numbering(const Params& p) { return polygon_numbering(p, BetaCase::B, Method::case_b); }

}  // namespace gnkb

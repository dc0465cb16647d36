#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "boxhelly/errors.hpp"
#include "boxhelly/rational.hpp"

namespace boxhelly {

// Closed non-empty interval [lo, hi]; degenerate (lo == hi) is legal and
// arises as box faces.
struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw std::invalid_argument("interval with lo > hi");
  }

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool degenerate() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}
  std::size_t dim() const { return coords.size(); }
  friend bool operator==(const Point&, const Point&) = default;
};

// Product of d closed intervals, one per axis. Dimension is a runtime value.
struct AxisBox {
  std::vector<Interval> sides;

  AxisBox() = default;
  explicit AxisBox(std::vector<Interval> s) : sides(std::move(s)) {
    if (sides.empty()) throw std::invalid_argument("box with dimension 0");
  }
  std::size_t dim() const { return sides.size(); }
  friend bool operator==(const AxisBox&, const AxisBox&) = default;
};

// selector[j] is false for the lo end, true for the hi end of axis j.
struct Vertex {
  Point point;
  std::vector<bool> selector;
};

// Selectors of p and q are bitwise complements: on every axis the pair takes
// both endpoints.
struct DiagonalPair {
  Vertex p;
  Vertex q;
};

inline std::optional<Interval> interval_intersect(const Interval& a, const Interval& b) {
  const Rational& lo = a.lo > b.lo ? a.lo : b.lo;
  const Rational& hi = a.hi < b.hi ? a.hi : b.hi;
  if (lo > hi) return std::nullopt;
  return Interval(lo, hi);
}

inline void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("dimension mismatch");
}

inline std::optional<AxisBox> box_intersect(const AxisBox& a, const AxisBox& b) {
  require_same_dim(a.dim(), b.dim());
  std::vector<Interval> sides;
  sides.reserve(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    auto s = interval_intersect(a.sides[j], b.sides[j]);
    if (!s) return std::nullopt;
    sides.push_back(std::move(*s));
  }
  return AxisBox(std::move(sides));
}

inline bool contains_point(const AxisBox& b, const Point& p) {
  require_same_dim(b.dim(), p.dim());
  for (std::size_t j = 0; j < b.dim(); ++j)
    if (!b.sides[j].contains(p.coords[j])) return false;
  return true;
}

// Distance between the axis-j projections when they are disjoint; absent when
// they overlap (touching counts as overlap).
inline std::optional<Rational> axis_gap(const AxisBox& a, const AxisBox& b, std::size_t axis) {
  require_same_dim(a.dim(), b.dim());
  if (axis >= a.dim()) throw std::invalid_argument("axis index out of range");
  const Interval& ia = a.sides[axis];
  const Interval& ib = b.sides[axis];
  if (ia.hi < ib.lo) return Rational(ib.lo - ia.hi);
  if (ib.hi < ia.lo) return Rational(ia.lo - ib.hi);
  return std::nullopt;
}

// The 2d faces in axis-major order, lo before hi: each is a copy of b with
// one side collapsed to a single endpoint.
inline std::vector<AxisBox> faces(const AxisBox& b) {
  std::vector<AxisBox> out;
  out.reserve(2 * b.dim());
  for (std::size_t j = 0; j < b.dim(); ++j) {
    for (int end = 0; end < 2; ++end) {
      std::vector<Interval> sides = b.sides;
      const Rational& v = end == 0 ? b.sides[j].lo : b.sides[j].hi;
      sides[j] = Interval(v, v);
      out.push_back(AxisBox(std::move(sides)));
    }
  }
  return out;
}

// 2^d vertices in binary-counter order with axis 0 as the most significant
// bit (lo = 0, hi = 1), so the all-lo corner comes first.
inline std::vector<Vertex> vertices(const AxisBox& b) {
  const std::size_t d = b.dim();
  if (d > 24) throw cap_error("vertex enumeration capped at dimension 24");
  std::vector<Vertex> out;
  out.reserve(std::size_t{1} << d);
  for (std::size_t code = 0; code < (std::size_t{1} << d); ++code) {
    Vertex v;
    v.selector.resize(d);
    v.point.coords.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
      bool hi = (code >> (d - 1 - j)) & 1;
      v.selector[j] = hi;
      v.point.coords.push_back(hi ? b.sides[j].hi : b.sides[j].lo);
    }
    out.push_back(std::move(v));
  }
  return out;
}

// 2^(d-1) pairs; each vertex appears in exactly one pair, paired with its
// selector complement. Order follows the first 2^(d-1) vertices.
inline std::vector<DiagonalPair> diagonal_pairs(const AxisBox& b) {
  const std::size_t d = b.dim();
  auto verts = vertices(b);
  std::vector<DiagonalPair> out;
  out.reserve(verts.size() / 2);
  const std::size_t all = verts.size() - 1;
  for (std::size_t code = 0; code < verts.size() / 2; ++code)
    out.push_back(DiagonalPair{verts[code], verts[all - code]});
  return out;
}

}  // namespace boxhelly

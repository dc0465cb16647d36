#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "boxhelly/piercing.hpp"

namespace boxhelly {

// n+1 pairwise disjoint unit intervals [2i, 2i+1]: every n-subset is
// n-pierceable, the whole family is not.
inline Family gen_interval_tight(std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<AxisBox> boxes;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i <= n; ++i) {
    long long lo = 2 * static_cast<long long>(i);
    boxes.push_back(AxisBox({Interval(make_rational(lo), make_rational(lo + 1))}));
    labels.push_back("I" + std::to_string(i + 1));
  }
  return Family(1, std::move(boxes), std::move(labels));
}

// The tight 2-piercing system: 3d-1 classes of 3 boxes each, every class a
// pairwise-disjoint triple, every colorful tuple hit by a diagonal vertex
// pair of the gap box D.
struct LowerBoundSystem {
  ColorSystem system;
  std::size_t d = 0;
};

namespace detail {

// slab constraining one axis, [-4,4] elsewhere
inline AxisBox slab(std::size_t d, std::size_t axis, Rational lo, Rational hi) {
  std::vector<Interval> sides;
  sides.reserve(d);
  for (std::size_t j = 0; j < d; ++j)
    sides.push_back(j == axis ? Interval(lo, hi)
                              : Interval(make_rational(-4), make_rational(4)));
  return AxisBox(std::move(sides));
}

// corner box constraining axis 0 and one other axis, [-5,5] elsewhere
inline AxisBox corner(std::size_t d, std::size_t axis, bool first_high, bool second_high) {
  const Rational lo5 = make_rational(-5);
  const Rational hi5 = make_rational(5);
  const Rational lo_cap = make_rational(1, 4);   // upper end of the low range
  const Rational hi_base = make_rational(3, 4);  // lower end of the high range
  std::vector<Interval> sides;
  sides.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (j == 0)
      sides.push_back(first_high ? Interval(hi_base, hi5) : Interval(lo5, lo_cap));
    else if (j == axis)
      sides.push_back(second_high ? Interval(hi_base, hi5) : Interval(lo5, lo_cap));
    else
      sides.push_back(Interval(lo5, hi5));
  }
  return AxisBox(std::move(sides));
}

}  // namespace detail

inline LowerBoundSystem gen_lowerbound_2piercing(std::size_t d) {
  if (d < 1) throw std::invalid_argument("dimension must be at least 1");
  std::vector<Family> classes;
  auto add_class = [&](std::size_t class_number, std::vector<AxisBox> boxes) {
    std::vector<std::string> labels;
    for (std::size_t c = 1; c <= boxes.size(); ++c)
      labels.push_back("B" + std::to_string(class_number) + "," + std::to_string(c));
    classes.push_back(Family(d, std::move(boxes), std::move(labels)));
  };

  for (std::size_t i = 0; i < d; ++i) {
    add_class(2 * i + 1,
              {detail::slab(d, i, make_rational(-4), make_rational(-2)),
               detail::slab(d, i, make_rational(-1), make_rational(0)),
               detail::slab(d, i, make_rational(5, 4), make_rational(3))});
    // Third box runs to -1, not -3/2: the witness tables place a vertex
    // coordinate at -1 and at -2 inside it, and the colorful piercing claim
    // fails under the narrower interval.
    add_class(2 * i + 2,
              {detail::slab(d, i, make_rational(2), make_rational(4)),
               detail::slab(d, i, make_rational(1), make_rational(3, 2)),
               detail::slab(d, i, make_rational(-5, 2), make_rational(-1))});
  }
  for (std::size_t k = 0; k + 1 < d; ++k) {
    std::size_t axis = d - 1 - k;
    add_class(2 * d + k + 1, {detail::corner(d, axis, false, false),
                              detail::corner(d, axis, false, true),
                              detail::corner(d, axis, true, true)});
  }
  return LowerBoundSystem{ColorSystem(d, std::move(classes)), d};
}

namespace detail {

// alpha/beta of the gap box D per axis, keyed by the choices within the two
// slab classes of that axis
inline std::pair<Rational, Rational> gap_table(std::size_t a, std::size_t b) {
  static const std::array<std::array<std::pair<long long, long long>, 3>, 3> num = {{
      {{{-2, 2}, {-2, 1}, {-2, 2}}},
      {{{0, 2}, {0, 1}, {-1, 1}}},
      {{{0, 2}, {0, 3}, {-2, 2}}},
  }};
  auto [an, bn] = num[a][b];
  // the single non-integer entry is beta = 3/2 at (3,2)
  if (a == 2 && b == 1) return {make_rational(an), make_rational(3, 2)};
  return {make_rational(an), make_rational(bn)};
}

}  // namespace detail

struct TableWitness {
  Point x;
  Point y;
  bool axis_consistent = true;  // false when only the literal table subscripts validated
};

// Maps a colorful tuple through the two witness tables to the diagonal pair
// (X, Y) of the gap box D, re-validating by exact containment. The corner
// classes swap X/Y on their second axis for their middle box so that the
// low-corner vertex keeps axis 0 low.
inline TableWitness witness_from_tables(const LowerBoundSystem& sys,
                                        const std::vector<std::size_t>& tuple) {
  const std::size_t d = sys.d;
  const std::size_t t = sys.system.classes.size();
  if (tuple.size() != t) throw std::invalid_argument("tuple size must match class count");
  for (std::size_t k = 0; k < t; ++k)
    if (tuple[k] >= sys.system.classes[k].boxes.size())
      throw std::invalid_argument("tuple index out of range");

  std::vector<Rational> alpha(d), beta(d);
  for (std::size_t j = 0; j < d; ++j) {
    auto [a, b] = detail::gap_table(tuple[2 * j], tuple[2 * j + 1]);
    alpha[j] = std::move(a);
    beta[j] = std::move(b);
  }

  auto build = [&](bool axis_consistent) {
    std::vector<Rational> x = alpha;
    std::vector<Rational> y = beta;
    for (std::size_t k = 0; k + 1 < d; ++k) {
      std::size_t axis = d - 1 - k;
      std::size_t source = axis_consistent ? axis : k;
      bool swap = tuple[2 * d + k] == 1;
      x[axis] = swap ? beta[source] : alpha[source];
      y[axis] = swap ? alpha[source] : beta[source];
    }
    return std::pair{Point(std::move(x)), Point(std::move(y))};
  };
  auto validate = [&](const Point& x, const Point& y) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < t; ++k) {
      const AxisBox& box = sys.system.classes[k].boxes[tuple[k]];
      if (!contains_point(box, x) && !contains_point(box, y)) return k;
    }
    return std::nullopt;
  };

  auto [x, y] = build(true);
  auto miss = validate(x, y);
  if (!miss) return TableWitness{std::move(x), std::move(y), true};

  auto [lx, ly] = build(false);
  if (!validate(lx, ly))
    return TableWitness{std::move(lx), std::move(ly), false};
  throw validation_error(
      "table witness misses a tuple box under both subscript readings", *miss);
}

}  // namespace boxhelly

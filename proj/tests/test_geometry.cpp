#include <catch2/catch_amalgamated.hpp>

#include "boxhelly/geometry.hpp"
#include "boxhelly/rng.hpp"
#include "support/generators.hpp"

using namespace boxhelly;
using testgen::random_box;

namespace {

AxisBox box1(long long lo, long long hi) {
  return AxisBox({Interval(make_rational(lo), make_rational(hi))});
}

AxisBox box2(long long xlo, long long xhi, long long ylo, long long yhi) {
  return AxisBox({Interval(make_rational(xlo), make_rational(xhi)),
                  Interval(make_rational(ylo), make_rational(yhi))});
}

}  // namespace

TEST_CASE("interval intersection") {
  auto meet = interval_intersect(Interval(make_rational(0), make_rational(2)),
                                 Interval(make_rational(1), make_rational(3)));
  REQUIRE(meet);
  CHECK(*meet == Interval(make_rational(1), make_rational(2)));

  auto touch = interval_intersect(Interval(make_rational(0), make_rational(1)),
                                  Interval(make_rational(1), make_rational(3)));
  REQUIRE(touch);
  CHECK(touch->degenerate());
  CHECK(touch->lo == make_rational(1));

  CHECK_FALSE(interval_intersect(Interval(make_rational(-4), make_rational(-2)),
                                 Interval(make_rational(-1), make_rational(0))));
}

TEST_CASE("intervals must be ordered, degenerate is fine") {
  CHECK_THROWS_AS(Interval(make_rational(1), make_rational(0)), std::invalid_argument);
  CHECK(Interval(make_rational(1), make_rational(1)).degenerate());
}

TEST_CASE("box intersection") {
  AxisBox unit = box2(0, 1, 0, 1);
  auto self = box_intersect(unit, unit);
  REQUIRE(self);
  CHECK(*self == unit);

  CHECK_FALSE(box_intersect(box2(0, 1, 0, 1), box2(2, 3, 0, 1)));

  auto corner = box_intersect(box2(0, 2, 0, 2), box2(1, 3, 1, 3));
  REQUIRE(corner);
  CHECK(*corner == box2(1, 2, 1, 2));

  CHECK_THROWS_AS(box_intersect(unit, box1(0, 1)), std::invalid_argument);
}

TEST_CASE("point containment") {
  AxisBox unit = box2(0, 1, 0, 1);
  CHECK(contains_point(unit, Point({make_rational(0), make_rational(1)})));
  CHECK_FALSE(contains_point(unit, Point({make_rational(1, 2), make_rational(2)})));
  CHECK_THROWS_AS(contains_point(unit, Point({make_rational(0)})), std::invalid_argument);

  // a vertex of a box always lies in the box
  AxisBox d = box2(-1, 1, 0, 2);
  CHECK(contains_point(d, Point({make_rational(-1), make_rational(0)})));
  for (const Vertex& v : vertices(d)) CHECK(contains_point(d, v.point));
}

TEST_CASE("axis gap") {
  auto gap = axis_gap(box2(-4, -2, -4, 4), box2(2, 4, -4, 4), 0);
  REQUIRE(gap);
  CHECK(*gap == make_rational(4));

  CHECK_FALSE(axis_gap(box1(0, 1), box1(1, 2), 0));  // touching projections overlap

  auto far = axis_gap(box1(0, 1), box1(5, 6), 0);
  REQUIRE(far);
  CHECK(*far == make_rational(4));

  // symmetric when the order flips
  CHECK(axis_gap(box1(5, 6), box1(0, 1), 0) == make_rational(4));
  CHECK_THROWS_AS(axis_gap(box1(0, 1), box1(5, 6), 1), std::invalid_argument);
}

TEST_CASE("faces come out axis-major, lo before hi") {
  CHECK(faces(box1(0, 1)).size() == 2);
  CHECK(faces(box1(0, 1))[0] == box1(0, 0));
  CHECK(faces(box1(0, 1))[1] == box1(1, 1));

  auto f2 = faces(box2(0, 1, 2, 3));
  REQUIRE(f2.size() == 4);
  CHECK(f2[0] == box2(0, 0, 2, 3));
  CHECK(f2[1] == box2(1, 1, 2, 3));
  CHECK(f2[2] == box2(0, 1, 2, 2));
  CHECK(f2[3] == box2(0, 1, 3, 3));

  AxisBox cube({Interval(make_rational(0), make_rational(1)),
                Interval(make_rational(0), make_rational(1)),
                Interval(make_rational(0), make_rational(1))});
  CHECK(faces(cube).size() == 6);
}

TEST_CASE("vertices and diagonal pairs") {
  AxisBox unit = box2(0, 1, 0, 1);
  auto verts = vertices(unit);
  REQUIRE(verts.size() == 4);
  CHECK(verts[0].point == Point({make_rational(0), make_rational(0)}));
  CHECK(verts[3].point == Point({make_rational(1), make_rational(1)}));

  auto pairs = diagonal_pairs(unit);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].p.point == Point({make_rational(0), make_rational(0)}));
  CHECK(pairs[0].q.point == Point({make_rational(1), make_rational(1)}));
  CHECK(pairs[1].p.point == Point({make_rational(0), make_rational(1)}));
  CHECK(pairs[1].q.point == Point({make_rational(1), make_rational(0)}));

  CHECK(diagonal_pairs(box1(3, 5)).size() == 1);
  AxisBox cube({Interval(make_rational(0), make_rational(1)),
                Interval(make_rational(0), make_rational(2)),
                Interval(make_rational(0), make_rational(3))});
  CHECK(vertices(cube).size() == 8);
  CHECK(diagonal_pairs(cube).size() == 4);
}

TEST_CASE("diagonal pairs take both endpoints on every axis") {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = 1 + rng.below(4);
    AxisBox b = random_box(rng, d);
    auto pairs = diagonal_pairs(b);
    CHECK(pairs.size() == (std::size_t{1} << (d - 1)));
    for (const DiagonalPair& pair : pairs)
      for (std::size_t j = 0; j < d; ++j) {
        const Rational& p = pair.p.point.coords[j];
        const Rational& q = pair.q.point.coords[j];
        bool takes_both = (p == b.sides[j].lo && q == b.sides[j].hi) ||
                          (p == b.sides[j].hi && q == b.sides[j].lo);
        CHECK(takes_both);
        CHECK(pair.p.selector[j] != pair.q.selector[j]);
      }
  }
}

TEST_CASE("box intersection is commutative, associative and idempotent") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t d = 1 + rng.below(3);
    AxisBox a = random_box(rng, d), b = random_box(rng, d), c = random_box(rng, d);
    CHECK(box_intersect(a, b) == box_intersect(b, a));
    CHECK(box_intersect(a, a) == a);
    auto ab = box_intersect(a, b);
    auto bc = box_intersect(b, c);
    auto left = ab ? box_intersect(*ab, c) : std::nullopt;
    auto right = bc ? box_intersect(a, *bc) : std::nullopt;
    CHECK(left == right);
  }
}

TEST_CASE("all axis gaps absent exactly when boxes intersect") {
  Rng rng(78);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t d = 1 + rng.below(3);
    AxisBox a = random_box(rng, d), b = random_box(rng, d);
    bool any_gap = false;
    for (std::size_t j = 0; j < d; ++j) any_gap = any_gap || axis_gap(a, b, j).has_value();
    CHECK(any_gap == !box_intersect(a, b).has_value());
  }
}

TEST_CASE("a box avoiding both ends of a diagonal pair misses two faces") {
  Rng rng(79);
  int observed = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::size_t d = 2 + rng.below(3);
    AxisBox b = random_box(rng, d, -5, 5);
    AxisBox other = random_box(rng, d, -5, 5);
    for (const DiagonalPair& pair : diagonal_pairs(b)) {
      if (contains_point(other, pair.p.point) || contains_point(other, pair.q.point))
        continue;
      ++observed;
      int disjoint_faces = 0;
      for (const AxisBox& face : faces(b))
        if (!box_intersect(face, other)) ++disjoint_faces;
      CHECK(disjoint_faces >= 2);
      break;
    }
  }
  CHECK(observed > 100);  // the premise actually fired
}

TEST_CASE("vertex-touching boxes that miss a diagonal pair cover few vertices") {
  // premise: every axis projection of the other box meets an endpoint of b's
  // side; conclusion: at most 2^(d-2) vertices of b inside, none diagonal
  Rng rng(80);
  int observed = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    std::size_t d = 2 + rng.below(2);
    AxisBox b = random_box(rng, d, -4, 4);
    AxisBox other = random_box(rng, d, -6, 6);
    bool touches = true;
    for (std::size_t j = 0; j < d && touches; ++j)
      touches = other.sides[j].contains(b.sides[j].lo) ||
                other.sides[j].contains(b.sides[j].hi);
    if (!touches) continue;
    bool misses_pair = false;
    for (const DiagonalPair& pair : diagonal_pairs(b))
      if (!contains_point(other, pair.p.point) && !contains_point(other, pair.q.point)) {
        misses_pair = true;
        break;
      }
    if (!misses_pair) continue;
    ++observed;
    auto verts = vertices(b);
    std::vector<bool> inside(verts.size());
    std::size_t count = 0;
    for (std::size_t v = 0; v < verts.size(); ++v) {
      inside[v] = contains_point(other, verts[v].point);
      if (inside[v]) ++count;
    }
    CHECK(count <= (std::size_t{1} << d) / 4);
    for (std::size_t v = 0; v < verts.size(); ++v)
      if (inside[v]) CHECK_FALSE(inside[verts.size() - 1 - v]);  // complement vertex
  }
  CHECK(observed > 50);
}

TEST_CASE("vertex enumeration caps the dimension") {
  std::vector<Interval> sides(30, Interval(make_rational(0), make_rational(1)));
  CHECK_THROWS_AS(vertices(AxisBox(std::move(sides))), cap_error);
}

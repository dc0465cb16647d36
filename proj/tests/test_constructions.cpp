#include <catch2/catch_amalgamated.hpp>

#include "boxhelly/constructions.hpp"
#include "boxhelly/helly.hpp"

using namespace boxhelly;

TEST_CASE("interval tightness family") {
  Family two = gen_interval_tight(1);
  REQUIRE(two.size() == 2);
  CHECK(two.boxes[0] == AxisBox({Interval(make_rational(0), make_rational(1))}));
  CHECK(two.boxes[1] == AxisBox({Interval(make_rational(2), make_rational(3))}));

  Family four = gen_interval_tight(3);
  auto report = check_helly(four, 3, 3);
  CHECK(report.premise_holds);
  CHECK_FALSE(report.conclusion_holds);

  CHECK(min_stab_intervals(gen_interval_tight(5)).count == 6);
  CHECK_THROWS_AS(gen_interval_tight(0), std::invalid_argument);
}

TEST_CASE("lower-bound system for d=1 has exactly the two slab classes") {
  auto sys = gen_lowerbound_2piercing(1);
  REQUIRE(sys.system.classes.size() == 2);
  const auto& odd = sys.system.classes[0].boxes;
  REQUIRE(odd.size() == 3);
  CHECK(odd[0].sides[0] == Interval(make_rational(-4), make_rational(-2)));
  CHECK(odd[1].sides[0] == Interval(make_rational(-1), make_rational(0)));
  CHECK(odd[2].sides[0] == Interval(make_rational(5, 4), make_rational(3)));
  const auto& even = sys.system.classes[1].boxes;
  CHECK(even[0].sides[0] == Interval(make_rational(2), make_rational(4)));
  CHECK(even[1].sides[0] == Interval(make_rational(1), make_rational(3, 2)));
  // upper end -1, not the narrower -3/2: the witness tables put points at -2
  // and -1 inside this box and the colorful claim needs both
  CHECK(even[2].sides[0] == Interval(make_rational(-5, 2), make_rational(-1)));

  CHECK(sys.system.classes[0].labels[1] == "B1,2");
  CHECK_THROWS_AS(gen_lowerbound_2piercing(0), std::invalid_argument);
}

TEST_CASE("lower-bound classes are pairwise disjoint triples") {
  for (std::size_t d = 1; d <= 4; ++d) {
    auto sys = gen_lowerbound_2piercing(d);
    REQUIRE(sys.system.classes.size() == 3 * d - 1);
    for (const Family& cls : sys.system.classes) {
      REQUIRE(cls.size() == 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = i + 1; k < 3; ++k)
          CHECK_FALSE(box_intersect(cls.boxes[i], cls.boxes[k]));
    }
  }
}

TEST_CASE("gap table rows match the published values") {
  auto at = [](std::size_t a, std::size_t b) { return detail::gap_table(a, b); };
  CHECK(at(0, 0) == std::pair{make_rational(-2), make_rational(2)});
  CHECK(at(0, 1) == std::pair{make_rational(-2), make_rational(1)});
  CHECK(at(0, 2) == std::pair{make_rational(-2), make_rational(2)});
  CHECK(at(1, 0) == std::pair{make_rational(0), make_rational(2)});
  CHECK(at(1, 1) == std::pair{make_rational(0), make_rational(1)});
  CHECK(at(1, 2) == std::pair{make_rational(-1), make_rational(1)});
  CHECK(at(2, 0) == std::pair{make_rational(0), make_rational(2)});
  CHECK(at(2, 1) == std::pair{make_rational(0), make_rational(3, 2)});
  CHECK(at(2, 2) == std::pair{make_rational(-2), make_rational(2)});
}

TEST_CASE("table witness for a concrete d=2 tuple") {
  auto sys = gen_lowerbound_2piercing(2);
  // axis 1 choices (B_{1,2}, B_{2,2}) -> (0, 1); axis 2 (B_{3,1}, B_{4,1}) ->
  // (-2, 2); corner class picks its middle box, swapping X/Y on axis 2
  auto w = witness_from_tables(sys, {1, 1, 0, 0, 1});
  CHECK(w.axis_consistent);
  CHECK(w.x == Point({make_rational(0), make_rational(2)}));
  CHECK(w.y == Point({make_rational(1), make_rational(-2)}));
}

TEST_CASE("table witnesses hit every colorful tuple and are diagonal in D") {
  for (std::size_t d : {2u, 3u}) {
    auto sys = gen_lowerbound_2piercing(d);
    ColorfulTupleStream stream(sys.system);
    std::vector<std::size_t> tuple;
    while (stream.next(tuple)) {
      auto w = witness_from_tables(sys, tuple);
      REQUIRE(w.axis_consistent);
      for (std::size_t k = 0; k < tuple.size(); ++k) {
        const AxisBox& box = sys.system.classes[k].boxes[tuple[k]];
        bool hit = contains_point(box, w.x) || contains_point(box, w.y);
        REQUIRE(hit);
      }
      // X and Y take opposite ends of D's side on every axis
      for (std::size_t j = 0; j < d; ++j) {
        auto [alpha, beta] = detail::gap_table(tuple[2 * j], tuple[2 * j + 1]);
        bool diagonal = (w.x.coords[j] == alpha && w.y.coords[j] == beta) ||
                        (w.x.coords[j] == beta && w.y.coords[j] == alpha);
        REQUIRE(diagonal);
      }
    }
  }
}

TEST_CASE("every diagonal pair of D hits the slab sub-tuple") {
  auto sys = gen_lowerbound_2piercing(3);
  ColorfulTupleStream stream(sys.system);
  std::vector<std::size_t> tuple;
  while (stream.next(tuple)) {
    std::vector<Interval> sides;
    for (std::size_t j = 0; j < 3; ++j) {
      auto [alpha, beta] = detail::gap_table(tuple[2 * j], tuple[2 * j + 1]);
      sides.push_back(Interval(alpha, beta));
    }
    AxisBox gap_box(std::move(sides));
    for (const DiagonalPair& pair : diagonal_pairs(gap_box))
      for (std::size_t k = 0; k < 6; ++k) {
        const AxisBox& slab = sys.system.classes[k].boxes[tuple[k]];
        bool hit = contains_point(slab, pair.p.point) || contains_point(slab, pair.q.point);
        REQUIRE(hit);
      }
  }
}

TEST_CASE("witness rejects malformed tuples") {
  auto sys = gen_lowerbound_2piercing(2);
  CHECK_THROWS_AS(witness_from_tables(sys, {0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(witness_from_tables(sys, {0, 0, 0, 0, 3}), std::invalid_argument);
}

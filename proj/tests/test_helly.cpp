#include <catch2/catch_amalgamated.hpp>

#include "boxhelly/constructions.hpp"
#include "boxhelly/helly.hpp"
#include "boxhelly/rng.hpp"
#include "support/generators.hpp"

using namespace boxhelly;
using testgen::random_clustered_family;
using testgen::random_family;
using testgen::random_premise_colorful_system;

namespace {

Family intervals(std::initializer_list<std::pair<const char*, const char*>> ivs) {
  std::vector<AxisBox> boxes;
  for (auto& [lo, hi] : ivs)
    boxes.push_back(AxisBox({Interval(parse_rational(lo), parse_rational(hi))}));
  return Family(1, std::move(boxes));
}

AxisBox box2(long long xlo, long long xhi, long long ylo, long long yhi) {
  return AxisBox({Interval(make_rational(xlo), make_rational(xhi)),
                  Interval(make_rational(ylo), make_rational(yhi))});
}

}  // namespace

TEST_CASE("check_helly separates premise from conclusion") {
  Family tight = gen_interval_tight(3);  // 4 disjoint intervals
  auto report = check_helly(tight, 3, 3);
  CHECK(report.premise_holds);
  CHECK_FALSE(report.conclusion_holds);

  auto whole = check_helly(tight, 4, 4);
  CHECK(whole.premise_holds);
  CHECK(whole.conclusion_holds);
  REQUIRE(whole.conclusion_certificate);
  CHECK(whole.conclusion_certificate->witness.size() <= 4);

  CHECK_THROWS_AS(check_helly(tight, 5, 3), std::invalid_argument);
}

TEST_CASE("intervals satisfy the Helly property at h = n+1") {
  Rng rng(1212);
  int premise_held = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + rng.below(3);
    std::size_t m = n + 1 + rng.below(4);
    Family f = random_family(rng, 1, m);
    auto report = check_helly(f, n + 1, n);
    if (report.premise_holds) {
      ++premise_held;
      CHECK(report.conclusion_holds);
    } else {
      REQUIRE(report.premise_violation);
      CHECK_FALSE(n_pierceable(f.subfamily(*report.premise_violation), n));
    }
  }
  CHECK(premise_held > 10);
}

TEST_CASE("colorful check on the tight system reports no pierceable class") {
  auto sys = gen_lowerbound_2piercing(2);
  auto report = check_colorful_helly(sys.system, 2, false);
  CHECK(report.premise_holds);
  CHECK_FALSE(report.conclusion_holds);
  CHECK(report.class_count_warning);  // 3d-1 classes, not the theorem's 3d
}

TEST_CASE("colorful check with identical pierceable classes") {
  ColorSystem c(1, std::vector<Family>(3, intervals({{"0", "1"}, {"5", "6"}})));
  auto weak = check_colorful_helly(c, 2, false);
  CHECK(weak.premise_holds);
  CHECK(weak.conclusion_holds);
  REQUIRE(weak.conclusion_certificate);
  CHECK(weak.conclusion_certificate->class_index == 0);
  CHECK_FALSE(weak.class_count_warning);

  auto strong = check_colorful_helly(c, 2, true);
  REQUIRE(strong.conclusion_certificate);
  CHECK(strong.conclusion_certificate->representatives.size() == 2);
}

TEST_CASE("adding a whole-space class to the tight system restores the conclusion") {
  auto sys = gen_lowerbound_2piercing(2);
  std::vector<Family> classes = sys.system.classes;
  std::vector<AxisBox> big = {box2(-10, 10, -10, 10), box2(-10, 10, -10, 10)};
  classes.push_back(Family(2, std::move(big)));
  ColorSystem extended(2, std::move(classes));

  auto report = check_colorful_helly(extended, 2, true);
  CHECK(report.premise_holds);
  CHECK(report.conclusion_holds);
  CHECK_FALSE(report.class_count_warning);  // now 3d = 6 classes
  REQUIRE(report.conclusion_certificate);
  CHECK(*report.conclusion_certificate->class_index == 5);
  CHECK(report.conclusion_certificate->representatives.size() == 5);
}

TEST_CASE("premise violation surfaces the first bad colorful tuple") {
  ColorSystem c(1, {intervals({{"0", "1"}}), intervals({{"2", "3"}}),
                    intervals({{"4", "5"}})});
  auto report = check_colorful_helly(c, 2, false);
  CHECK_FALSE(report.premise_holds);
  REQUIRE(report.premise_violation);
  CHECK(*report.premise_violation == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("random premise-satisfying systems always produce strong certificates") {
  Rng rng(7117);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 1 + rng.below(2);
    ColorSystem c = random_premise_colorful_system(rng, d);
    auto weak = check_colorful_helly(c, 2, false);
    REQUIRE(weak.premise_holds);
    CHECK(weak.conclusion_holds);
    auto strong = check_colorful_helly(c, 2, true);
    CHECK(strong.conclusion_holds);
    REQUIRE(strong.conclusion_certificate);
    const auto& cert = *strong.conclusion_certificate;
    std::vector<AxisBox> extended = c.classes[*cert.class_index].boxes;
    for (auto& [cls, idx] : cert.representatives)
      extended.push_back(c.classes[cls].boxes[idx]);
    CHECK(n_pierceable(Family(d, std::move(extended)), 2));
  }
}

TEST_CASE("fraction of pierceable tuples, exhaustively") {
  Family disjoint = intervals({{"0", "1"}, {"2", "3"}, {"4", "5"}});
  auto zero = fraction_pierceable(disjoint, 3, 2);
  CHECK(zero.fraction == 0);
  CHECK(zero.total == 1);

  Family copies(1, std::vector<AxisBox>(4, AxisBox({Interval(make_rational(0), make_rational(1))})));
  auto one = fraction_pierceable(copies, 4, 1);
  CHECK(one.fraction == 1);

  CHECK_THROWS_AS(fraction_pierceable(disjoint, 4, 1), std::invalid_argument);
}

TEST_CASE("sampled fraction approaches the exact one") {
  Rng rng(8080);
  Family f = random_clustered_family(rng, 2, 10);
  auto exact = fraction_pierceable(f, 4, 2);
  auto sampled = fraction_pierceable_sampled(f, 4, 2, 4000, 17);
  Rational diff = sampled.fraction - exact.fraction;
  if (diff < 0) diff = -diff;
  CHECK(diff <= make_rational(1, 20));
  CHECK(sampled.total == 4000);
  CHECK_FALSE(sampled.exact);
  CHECK(sampled.seed == 17);

  // same seed, same estimate
  auto again = fraction_pierceable_sampled(f, 4, 2, 4000, 17);
  CHECK(again.fraction == sampled.fraction);
}

TEST_CASE("largest pierceable subfamily") {
  Family disjoint = intervals({{"0", "1"}, {"2", "3"}, {"4", "5"}});
  auto two = max_pierceable_subfamily(disjoint, 2);
  CHECK(two.indices.size() == 2);

  Family shared(2, {box2(0, 2, 0, 2), box2(1, 3, 1, 3), box2(0, 3, 0, 3)});
  auto all = max_pierceable_subfamily(shared, 1);
  CHECK(all.indices.size() == 3);
  REQUIRE(all.witness.size() == 1);
  for (const AxisBox& b : shared.boxes) CHECK(contains_point(b, all.witness[0]));
}

TEST_CASE("grid pairs match the subset-search fallback") {
  Rng rng(9090);
  for (int trial = 0; trial < 25; ++trial) {
    Family f = random_family(rng, 2, 6 + rng.below(5));
    auto fast = max_pierceable_subfamily(f, 2);
    // fallback route: decreasing-size subset search with the same solver
    std::size_t best = 0;
    for (std::size_t s = f.size(); s >= 1 && best == 0; --s) {
      auto idx = detail::first_combination(s);
      do {
        if (n_pierceable(f.subfamily(idx), 2)) {
          best = s;
          break;
        }
      } while (detail::next_combination(idx, f.size()));
    }
    CHECK(fast.indices.size() == best);
    CHECK(n_pierceable(f.subfamily(fast.indices), 2));
  }
}

TEST_CASE("complete missing tuple in the plus-sign configuration") {
  Family plus(2, {box2(0, 1, 0, 3), box2(2, 3, 0, 3), box2(0, 3, 0, 1), box2(0, 3, 2, 3)});
  auto found = find_complete_missing_tuple(plus, 2, 1, 2);
  REQUIRE(found);
  REQUIRE(found->parts.size() == 2);
  CHECK(found->parts[0] == std::vector<std::size_t>{0, 1});
  CHECK(found->parts[1] == std::vector<std::size_t>{2, 3});
  CHECK_FALSE(found->vacuous_cliques);
}

TEST_CASE("no missing edges means no missing tuple") {
  Family shared(2, {box2(0, 2, 0, 2), box2(1, 3, 1, 3), box2(0, 3, 0, 3)});
  CHECK_FALSE(find_complete_missing_tuple(shared, 2, 1, 1));
}

TEST_CASE("disjointness bound makes oversized requests absent, caps error otherwise") {
  Family plus(2, {box2(0, 1, 0, 3), box2(2, 3, 0, 3), box2(0, 3, 0, 1), box2(0, 3, 2, 3)});
  CHECK_FALSE(find_complete_missing_tuple(plus, 2, 1, 3));  // 3*2 > 4 boxes

  Rng rng(11);
  Family big = random_family(rng, 2, 16);
  CHECK_THROWS_AS(find_complete_missing_tuple(big, 2, 1, 2), cap_error);
}

TEST_CASE("m smaller than t flags vacuous cliques") {
  // two disjoint triples of intervals; any single missing 3-edge qualifies
  Family f = intervals({{"0", "1"}, {"2", "3"}, {"4", "5"}, {"6", "7"}});
  auto found = find_complete_missing_tuple(f, 3, 2, 1);
  REQUIRE(found);
  CHECK(found->vacuous_cliques);
  CHECK(found->parts[0] == std::vector<std::size_t>{0, 1, 2});
}

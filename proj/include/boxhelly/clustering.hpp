#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "boxhelly/piercing.hpp"
#include "boxhelly/rng.hpp"

namespace boxhelly {

// Shape of the covering box; translates make any reference position
// irrelevant, so only the side lengths are stored.
struct BaseBox {
  std::vector<Rational> extents;

  BaseBox() = default;
  explicit BaseBox(std::vector<Rational> e) : extents(std::move(e)) {
    if (extents.empty()) throw std::invalid_argument("base box with dimension 0");
    for (const Rational& x : extents)
      if (x <= 0) throw std::invalid_argument("base box extents must be positive");
  }
  std::size_t dim() const { return extents.size(); }
  friend bool operator==(const BaseBox&, const BaseBox&) = default;
};

// Translate of the base centered at s: axis j spans [s_j - e_j/2, s_j + e_j/2].
inline AxisBox translate_centered(const BaseBox& base, const Point& s) {
  require_same_dim(base.dim(), s.dim());
  std::vector<Interval> sides;
  sides.reserve(base.dim());
  for (std::size_t j = 0; j < base.dim(); ++j) {
    Rational half = base.extents[j] / 2;
    sides.push_back(Interval(s.coords[j] - half, s.coords[j] + half));
  }
  return AxisBox(std::move(sides));
}

struct CoverPart {
  Point center;
  std::vector<std::size_t> members;  // indices into the queried point list
};

struct CoverResult {
  bool coverable = false;
  std::vector<CoverPart> parts;
};

// Coverage of W by n translates of the base is equivalent to n-piercability
// of the translates centered at W; each piercing point becomes a covering
// center.
inline CoverResult cover_check(const std::vector<Point>& w, const BaseBox& base, std::size_t n) {
  if (w.empty()) throw std::invalid_argument("cover query on empty point set");
  std::vector<AxisBox> translates;
  translates.reserve(w.size());
  for (const Point& p : w) translates.push_back(translate_centered(base, p));
  auto cert = pierce_n(Family(base.dim(), std::move(translates)), n);
  CoverResult result;
  if (cert.verdict != Verdict::pierceable) return result;
  result.coverable = true;
  for (const Point& c : cert.witness) result.parts.push_back(CoverPart{c, {}});
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool placed = false;
    for (CoverPart& part : result.parts) {
      if (contains_point(translate_centered(base, part.center), w[i])) {
        part.members.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) throw validation_error("cover witness misses a point", i);
  }
  return result;
}

// Independent oracle: enumerate assignments of points to at most n groups and
// test per-axis spread against the extents. Shares nothing with the piercing
// route.
inline bool coverable_oracle(const std::vector<Point>& w, const BaseBox& base, std::size_t n) {
  if (w.empty()) throw std::invalid_argument("cover query on empty point set");
  require_same_dim(base.dim(), w.front().dim());
  if (w.size() > effective_cap(12)) throw cap_error("coverable_oracle capped at 12 points");
  const std::size_t d = base.dim();
  std::vector<std::vector<Rational>> lo(n), hi(n);
  std::vector<bool> open(n, false);

  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == w.size()) return true;
    for (std::size_t g = 0; g < n; ++g) {
      if (!open[g]) {
        open[g] = true;
        lo[g] = hi[g] = w[i].coords;
        if (self(self, i + 1)) return true;
        open[g] = false;
        break;  // empty groups are interchangeable; trying one suffices
      }
      std::vector<Rational> save_lo = lo[g];
      std::vector<Rational> save_hi = hi[g];
      bool fits = true;
      for (std::size_t j = 0; j < d; ++j) {
        if (w[i].coords[j] < lo[g][j]) lo[g][j] = w[i].coords[j];
        if (w[i].coords[j] > hi[g][j]) hi[g][j] = w[i].coords[j];
        if (hi[g][j] - lo[g][j] > base.extents[j]) {
          fits = false;
          break;
        }
      }
      if (fits && self(self, i + 1)) return true;
      lo[g] = std::move(save_lo);
      hi[g] = std::move(save_hi);
    }
    return false;
  };
  return rec(rec, 0);
}

// Minimum number of points whose removal leaves a coverable set; exact by
// searching removal sets in increasing size.
inline std::size_t distance_to_clusterable(const std::vector<Point>& s, const BaseBox& base,
                                           std::size_t n) {
  if (s.empty()) throw std::invalid_argument("distance query on empty point set");
  if (s.size() > effective_cap(20))
    throw cap_error("distance_to_clusterable capped at 20 points");
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k == 0) {
      if (cover_check(s, base, n).coverable) return 0;
      continue;
    }
    auto removed = detail::first_combination(k);
    do {
      std::vector<Point> rest;
      rest.reserve(s.size() - k);
      std::size_t r = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (r < k && removed[r] == i) {
          ++r;
          continue;
        }
        rest.push_back(s[i]);
      }
      if (cover_check(rest, base, n).coverable) return k;
    } while (detail::next_combination(removed, s.size()));
  }
  return s.size() - 1;  // a single point is always coverable
}

// Colorful Helly number used as the tester's tuple size: n+1 in dimension 1,
// 3d for two piercing, 2 for one piercing. Anything else has no finite Helly
// number (aleph-0 for d >= 2, n >= 3 away from (2,3)), so the tester refuses.
inline std::size_t default_tuple_size(std::size_t d, std::size_t n) {
  if (d < 1 || n < 1) throw std::invalid_argument("need d >= 1 and n >= 1");
  if (d == 1) return n + 1;
  if (n == 1) return 2;
  if (n == 2) return 3 * d;
  throw std::invalid_argument(
      "no finite colorful Helly number for d >= 2 boxes with n >= 3 piercing "
      "(the monochromatic number is already infinite there)");
}

struct ClusterInstance {
  std::vector<Point> points;
  BaseBox base;
  std::size_t n = 1;
  Rational epsilon;
  Rational delta;
  std::optional<Rational> gamma;

  ClusterInstance() = default;
  ClusterInstance(std::vector<Point> pts, BaseBox base_, std::size_t n_, Rational eps,
                  Rational del, std::optional<Rational> gam = std::nullopt)
      : points(std::move(pts)),
        base(std::move(base_)),
        n(n_),
        epsilon(std::move(eps)),
        delta(std::move(del)),
        gamma(std::move(gam)) {
    if (points.empty()) throw std::invalid_argument("cluster instance with no points");
    for (const Point& p : points) require_same_dim(p.dim(), base.dim());
    if (n < 1) throw std::invalid_argument("piercing budget must be at least 1");
    auto in_unit = [](const Rational& r) { return r > 0 && r <= 1; };
    if (!in_unit(epsilon) || !in_unit(delta))
      throw std::invalid_argument("epsilon and delta must lie in (0, 1]");
    if (gamma && !in_unit(*gamma))
      throw std::invalid_argument("gamma must lie in (0, 1]");
  }
  std::size_t dim() const { return base.dim(); }
  std::size_t size() const { return points.size(); }
  friend bool operator==(const ClusterInstance&, const ClusterInstance&) = default;
};

namespace detail {

// Upper bound on ln(x) for x in [1, 2] via 2*atanh((x-1)/(x+1)); the
// geometric tail bound is added to the partial sum, so the result always
// overshoots by at most tol.
inline Rational ln_upper_small(const Rational& x, const Rational& tol) {
  Rational u = (x - 1) / (x + 1);
  if (u == 0) return Rational(0);
  Rational u2 = u * u;
  Rational term = 2 * u;
  Rational sum = 0;
  std::uint64_t i = 0;
  while (true) {
    sum += term / static_cast<long long>(2 * i + 1);
    Rational next = term * u2;
    Rational tail = next / (static_cast<long long>(2 * i + 3) * (1 - u2));
    if (tail <= tol) return sum + tail;
    term = std::move(next);
    ++i;
  }
}

// Upper bound on ln(x), x >= 1, within 1e-6: halve into [1, 2] and add
// multiples of an ln 2 bound.
inline Rational ln_upper(Rational x) {
  if (x < 1) throw std::invalid_argument("ln_upper requires x >= 1");
  static const Rational ln2 = ln_upper_small(Rational(2), Rational(1, 1000000000));
  std::uint64_t halvings = 0;
  while (x > 2) {
    x /= 2;
    ++halvings;
  }
  return static_cast<long long>(halvings) * ln2 +
         ln_upper_small(x, Rational(1, 2000000));
}

}  // namespace detail

// ceil((1/gamma) * ln(1/delta)) in exact arithmetic; the rational ln upper
// bound only ever adds trials, never drops below the guarantee.
inline std::uint64_t planned_trials(const Rational& gamma, const Rational& delta) {
  Rational t = detail::ln_upper(1 / delta) / gamma;
  BigInt planned = ceil_rational(t);
  if (planned > BigInt(effective_cap(1000000)))
    throw cap_error("planned trial count exceeds cap");
  return planned.convert_to<std::uint64_t>();
}

struct TesterReport {
  bool accepted = false;
  std::vector<Point> witness;  // the uncoverable sample on rejection
  std::uint64_t trials_run = 0;
  std::uint64_t trials_planned = 0;
  std::uint64_t seed = 0;
};

// Samples k uniform h_c-subsets and returns the fraction that fail coverage:
// the empirical stand-in for the non-constructive gamma.
inline Rational calibrate_gamma(const ClusterInstance& inst, std::uint64_t k,
                                std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("sample count must be at least 1");
  std::size_t hc = default_tuple_size(inst.dim(), inst.n);
  if (inst.size() < hc)
    throw std::invalid_argument("instance smaller than the tuple size");
  Rng rng(seed);
  std::uint64_t failures = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    auto idx = rng.sample_distinct(inst.size(), hc);
    std::vector<Point> w;
    w.reserve(hc);
    for (std::size_t p : idx) w.push_back(inst.points[p]);
    if (!cover_check(w, inst.base, inst.n).coverable) ++failures;
  }
  return Rational(BigInt(failures), BigInt(k));
}

// One-sided tester: T = ceil((1/gamma) ln(1/delta)) independent trials, each
// sampling h_c distinct points; a failed cover is re-verified and returned as
// witness. Coverable inputs are always accepted.
inline TesterReport cluster_test(const ClusterInstance& inst, std::uint64_t seed) {
  if (!inst.gamma)
    throw std::invalid_argument("gamma is required; calibrate or pass one explicitly");
  std::size_t hc = default_tuple_size(inst.dim(), inst.n);
  if (inst.size() < hc)
    throw std::invalid_argument("instance smaller than the tuple size");
  TesterReport report;
  report.seed = seed;
  report.trials_planned = planned_trials(*inst.gamma, inst.delta);
  Rng rng(seed);
  for (std::uint64_t trial = 0; trial < report.trials_planned; ++trial) {
    auto idx = rng.sample_distinct(inst.size(), hc);
    std::vector<Point> w;
    w.reserve(hc);
    for (std::size_t p : idx) w.push_back(inst.points[p]);
    ++report.trials_run;
    if (!cover_check(w, inst.base, inst.n).coverable) {
      report.accepted = false;
      report.witness = std::move(w);
      if (cover_check(report.witness, inst.base, inst.n).coverable)
        throw validation_error("rejection witness failed re-verification", trial);
      return report;
    }
  }
  report.accepted = true;
  return report;
}

enum class ClusterKind { coverable, far };

// Experiment harness: n well-separated clusters inside translates of the
// base, plus (for far instances) an extra cluster of ceil(eps*m) points whose
// removal is necessary and sufficient for coverability.
inline ClusterInstance gen_cluster_instance(ClusterKind kind, const Rational& epsilon,
                                            std::size_t d, std::size_t n, std::size_t m,
                                            std::uint64_t seed, BaseBox base = BaseBox(),
                                            Rational delta = Rational(1, 10)) {
  if (d < 1 || n < 1 || m < 1) throw std::invalid_argument("need d, n, m >= 1");
  if (base.extents.empty())
    base = BaseBox(std::vector<Rational>(d, Rational(1)));
  require_same_dim(base.dim(), d);
  std::size_t hc = default_tuple_size(d, n);
  if (m < hc) throw std::invalid_argument("need at least h_c points");

  // cluster sizes: coverable spreads m over n clusters; far adds an
  // (n+1)-th cluster of exactly ceil(eps*m) points, no larger than any other
  std::vector<std::size_t> sizes;
  if (kind == ClusterKind::coverable) {
    sizes.assign(n, m / n);
    for (std::size_t i = 0; i < m % n; ++i) ++sizes[i];
  } else {
    BigInt far_count = ceil_rational(epsilon * static_cast<long long>(m));
    if (far_count < 1 || BigInt(m) < far_count)
      throw std::invalid_argument("infeasible far fraction");
    std::size_t fc = far_count.convert_to<std::size_t>();
    std::size_t rest = m - fc;
    sizes.assign(n, rest / n);
    for (std::size_t i = 0; i < rest % n; ++i) ++sizes[i];
    if (sizes.back() < fc)
      throw std::invalid_argument(
          "infeasible parameters: a planted cluster would be smaller than the far cluster");
    sizes.push_back(fc);
  }

  // centers on the diagonal, spaced far beyond the largest extent
  Rational max_extent = base.extents.front();
  for (const Rational& e : base.extents)
    if (e > max_extent) max_extent = e;
  Rational spacing = 10 * max_extent;

  Rng rng(seed);
  std::vector<Point> points;
  points.reserve(m);
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    std::vector<Rational> center(d);
    for (std::size_t j = 0; j < d; ++j)
      center[j] = spacing * static_cast<long long>(c);
    for (std::size_t p = 0; p < sizes[c]; ++p) {
      std::vector<Rational> coords(d);
      for (std::size_t j = 0; j < d; ++j) {
        // offset on a 17-step lattice spanning [-e/2, e/2]
        Rational offset =
            base.extents[j] * (static_cast<long long>(rng.below(17)) - 8) / 16;
        coords[j] = center[j] + offset;
      }
      points.push_back(Point(std::move(coords)));
    }
  }
  return ClusterInstance(std::move(points), std::move(base), n, epsilon, std::move(delta));
}

}  // namespace boxhelly

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "boxhelly/piercing.hpp"
#include "boxhelly/rng.hpp"

namespace boxhelly {

struct HellyCertificate {
  // set for colorful verifiers; absent for the monochromatic one
  std::optional<std::size_t> class_index;
  // one (class, box) per other class when a strong certificate was requested
  std::vector<std::pair<std::size_t, std::size_t>> representatives;
  std::vector<Point> witness;
};

struct HellyReport {
  bool premise_holds = false;
  bool conclusion_holds = false;
  // h-subset of family indices, or one box index per class for colorful runs
  std::optional<std::vector<std::size_t>> premise_violation;
  std::optional<HellyCertificate> conclusion_certificate;
  bool class_count_warning = false;
};

// Checks "every h-subset n-pierceable" exhaustively against "the whole family
// is n-pierceable"; reporting both sides makes tightness instances visible.
inline HellyReport check_helly(const Family& f, std::size_t h, std::size_t n) {
  detail::require_solvable(f, n);
  if (h < 1) throw std::invalid_argument("tuple size h must be at least 1");
  if (f.size() < h) throw std::invalid_argument("family smaller than tuple size h");
  if (detail::binomial(f.size(), h) > effective_cap(10000000))
    throw cap_error("too many h-subsets to enumerate");

  detail::PierceEngine engine(f.boxes);
  HellyReport report;
  report.premise_holds = true;
  auto idx = detail::first_combination(h);
  do {
    if (!engine.pierceable(detail::mask_of(idx), n)) {
      report.premise_holds = false;
      report.premise_violation = idx;
      break;
    }
  } while (detail::next_combination(idx, f.size()));

  auto witness = engine.decide(engine.full_mask(), n);
  report.conclusion_holds = witness.has_value();
  if (witness)
    report.conclusion_certificate = HellyCertificate{std::nullopt, {}, std::move(*witness)};
  return report;
}

// Colorful verifier for the weak and strong conclusions. The premise is
// checked by exhaustive search over colorful tuples, never by replaying the
// proof. Class counts other than the theorem's run with a warning flag so
// that tightness instances go through the same path.
inline HellyReport check_colorful_helly(const ColorSystem& c, std::size_t n, bool strong) {
  if (n < 1) throw std::invalid_argument("piercing budget must be at least 1");
  const std::size_t t = c.classes.size();
  HellyReport report;
  const bool expected =
      (n == 2 && t == 3 * c.dim) || (c.dim == 1 && t == n + 1);
  report.class_count_warning = !expected;

  if (auto bad = check_all_colorful(c, n)) {
    report.premise_holds = false;
    report.premise_violation = *bad;
    return report;
  }
  report.premise_holds = true;

  for (std::size_t i = 0; i < t; ++i) {
    auto own = pierce_n(c.classes[i], n);
    if (own.verdict != Verdict::pierceable) continue;
    if (!strong) {
      report.conclusion_holds = true;
      report.conclusion_certificate = HellyCertificate{i, {}, std::move(own.witness)};
      return report;
    }
    // exhaustive over representative combinations, lexicographic
    std::vector<std::size_t> pick(t, 0);
    while (true) {
      std::vector<AxisBox> extended = c.classes[i].boxes;
      std::vector<std::pair<std::size_t, std::size_t>> reps;
      for (std::size_t k = 0; k < t; ++k) {
        if (k == i) continue;
        extended.push_back(c.classes[k].boxes[pick[k]]);
        reps.emplace_back(k, pick[k]);
      }
      auto cert = pierce_n(Family(c.dim, std::move(extended)), n);
      if (cert.verdict == Verdict::pierceable) {
        report.conclusion_holds = true;
        report.conclusion_certificate =
            HellyCertificate{i, std::move(reps), std::move(cert.witness)};
        return report;
      }
      std::size_t k = t;
      bool done = false;
      while (k-- > 0) {
        if (k == i) {
          if (k == 0) done = true;
          continue;
        }
        if (++pick[k] < c.classes[k].boxes.size()) break;
        pick[k] = 0;
        if (k == 0) done = true;
      }
      if (done) break;
    }
  }
  report.conclusion_holds = false;
  return report;
}

struct FractionResult {
  bool exact = true;
  Rational fraction;
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  std::optional<std::uint64_t> seed;
};

// Exact fraction of n-pierceable t-subsets over C(|f|, t).
inline FractionResult fraction_pierceable(const Family& f, std::size_t t, std::size_t n) {
  detail::require_solvable(f, n);
  if (t < 1 || f.size() < t) throw std::invalid_argument("need 1 <= t <= |family|");
  std::uint64_t total = detail::binomial(f.size(), t);
  if (total > effective_cap(10000000)) throw cap_error("too many t-subsets to enumerate");
  detail::PierceEngine engine(f.boxes);
  FractionResult r;
  r.total = total;
  auto idx = detail::first_combination(t);
  do {
    if (engine.pierceable(detail::mask_of(idx), n)) ++r.hits;
  } while (detail::next_combination(idx, f.size()));
  r.fraction = Rational(BigInt(r.hits), BigInt(total));
  return r;
}

// Seeded estimate: k uniform t-subsets (distinct indices within a draw).
inline FractionResult fraction_pierceable_sampled(const Family& f, std::size_t t,
                                                  std::size_t n, std::uint64_t k,
                                                  std::uint64_t seed) {
  detail::require_solvable(f, n);
  if (t < 1 || f.size() < t) throw std::invalid_argument("need 1 <= t <= |family|");
  if (k < 1) throw std::invalid_argument("sample count must be at least 1");
  detail::PierceEngine engine(f.boxes);
  Rng rng(seed);
  FractionResult r;
  r.exact = false;
  r.total = k;
  r.seed = seed;
  for (std::uint64_t i = 0; i < k; ++i) {
    auto idx = rng.sample_distinct(f.size(), t);
    if (engine.pierceable(detail::mask_of(idx), n)) ++r.hits;
  }
  r.fraction = Rational(BigInt(r.hits), BigInt(k));
  return r;
}

struct SubfamilyResult {
  std::vector<std::size_t> indices;
  std::vector<Point> witness;
};

namespace detail {

// Distinct candidate grid points with their hit masks, in lexicographic
// candidate order, first point kept per distinct mask.
inline std::vector<std::pair<std::uint64_t, Point>> candidate_hit_masks(const Family& f) {
  const std::size_t d = f.dim;
  std::vector<std::vector<Rational>> values(d);
  std::vector<std::vector<std::uint64_t>> axis_mask(d);
  std::uint64_t grid = 1;
  for (std::size_t j = 0; j < d; ++j) {
    for (const AxisBox& b : f.boxes) values[j].push_back(b.sides[j].lo);
    std::sort(values[j].begin(), values[j].end());
    values[j].erase(std::unique(values[j].begin(), values[j].end()), values[j].end());
    axis_mask[j].resize(values[j].size());
    for (std::size_t v = 0; v < values[j].size(); ++v) {
      std::uint64_t am = 0;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (f.boxes[i].sides[j].contains(values[j][v])) am |= std::uint64_t{1} << i;
      axis_mask[j][v] = am;
    }
    if (grid > effective_cap(10000000) / std::max<std::size_t>(values[j].size(), 1))
      throw cap_error("candidate grid too large");
    grid *= values[j].size();
  }
  std::vector<std::pair<std::uint64_t, Point>> out;
  std::unordered_map<std::uint64_t, bool> seen;
  std::vector<std::size_t> pick(d, 0);
  while (true) {
    std::uint64_t hit = f.size() == 64 ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << f.size()) - 1;
    for (std::size_t j = 0; j < d; ++j) hit &= axis_mask[j][pick[j]];
    if (!seen.count(hit)) {
      seen.emplace(hit, true);
      std::vector<Rational> coords;
      for (std::size_t j = 0; j < d; ++j) coords.push_back(values[j][pick[j]]);
      out.emplace_back(hit, Point(std::move(coords)));
    }
    std::size_t j = d;
    bool done = false;
    while (j-- > 0) {
      if (++pick[j] < values[j].size()) break;
      pick[j] = 0;
      if (j == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

inline std::vector<std::size_t> mask_indices(std::uint64_t mask, std::size_t m) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m; ++i)
    if (mask >> i & 1) idx.push_back(i);
  return idx;
}

}  // namespace detail

// Maximum-cardinality n-pierceable subfamily. For n = 1 and n = 2 the
// candidate grid is exhaustive (snapping makes it complete); any other n
// falls back to subset search over families of at most 20 boxes.
inline SubfamilyResult max_pierceable_subfamily(const Family& f, std::size_t n) {
  detail::require_solvable(f, n);
  if (f.size() > 64) throw cap_error("max_pierceable_subfamily capped at 64 boxes");
  if (n == 1 || n == 2) {
    auto candidates = detail::candidate_hit_masks(f);
    std::uint64_t best_mask = 0;
    int best_count = -1;
    std::vector<Point> best_witness;
    if (n == 1) {
      for (auto& [mask, point] : candidates) {
        int cnt = std::popcount(mask);
        if (cnt > best_count) {
          best_count = cnt;
          best_mask = mask;
          best_witness = {point};
        }
      }
    } else {
      for (std::size_t a = 0; a < candidates.size(); ++a) {
        for (std::size_t b = a; b < candidates.size(); ++b) {
          std::uint64_t u = candidates[a].first | candidates[b].first;
          int cnt = std::popcount(u);
          if (cnt > best_count) {
            best_count = cnt;
            best_mask = u;
            best_witness = {candidates[a].second};
            if (b != a) best_witness.push_back(candidates[b].second);
          }
        }
      }
    }
    return SubfamilyResult{detail::mask_indices(best_mask, f.size()), std::move(best_witness)};
  }
  if (f.size() > effective_cap(20))
    throw cap_error("subset-search fallback capped at 20 boxes");
  detail::PierceEngine engine(f.boxes);
  for (std::size_t s = f.size(); s >= 1; --s) {
    auto idx = detail::first_combination(s);
    do {
      auto w = engine.decide(detail::mask_of(idx), n);
      if (w) return SubfamilyResult{idx, std::move(*w)};
    } while (detail::next_combination(idx, f.size()));
  }
  throw std::logic_error("even singletons were not pierceable");
}

// m pairwise-disjoint non-edges of the t-uniform piercing hypergraph such
// that every one-element-per-part selection is a clique.
struct MissingTuple {
  std::vector<std::vector<std::size_t>> parts;
  // selections of size m < t have no t-subsets; the clique condition held
  // vacuously
  bool vacuous_cliques = false;
};

inline std::optional<MissingTuple> find_complete_missing_tuple(const Family& f, std::size_t t,
                                                               std::size_t n, std::size_t m) {
  detail::require_solvable(f, n);
  if (t < 1 || m < 1) throw std::invalid_argument("t and m must be at least 1");
  // m pairwise-disjoint t-sets need m*t vertices
  if (m * t > f.size()) return std::nullopt;
  if (f.size() > effective_cap(15) || t > effective_cap(3))
    throw cap_error("missing-tuple search capped at 15 boxes and t <= 3");

  detail::PierceEngine engine(f.boxes);
  auto is_edge = [&](std::uint64_t mask) { return engine.pierceable(mask, n); };

  // all missing edges (non-pierceable t-sets), lexicographic
  std::vector<std::vector<std::size_t>> missing;
  {
    auto idx = detail::first_combination(t);
    do {
      if (!is_edge(detail::mask_of(idx))) missing.push_back(idx);
    } while (detail::next_combination(idx, f.size()));
  }
  if (missing.size() < m) return std::nullopt;

  // A selection (one element per part) is a clique iff for every t-subset of
  // the involved parts, every cross choice is an edge. Checked incrementally:
  // when a part joins, only part-subsets containing it are new.
  std::vector<std::size_t> chosen;  // indices into `missing`
  auto cross_ok = [&](std::size_t candidate) {
    if (chosen.size() + 1 < t) return true;  // no t-subset of parts yet
    const std::size_t need = t - 1;          // parts drawn from `chosen`
    auto idx = detail::first_combination(need);
    do {
      std::vector<std::size_t> pick(need, 0);
      while (true) {
        for (std::size_t e = 0; e < t; ++e) {
          std::uint64_t mask = std::uint64_t{1} << missing[candidate][e];
          for (std::size_t q = 0; q < need; ++q)
            mask |= std::uint64_t{1} << missing[chosen[idx[q]]][pick[q]];
          if (!is_edge(mask)) return false;
        }
        std::size_t q = need;
        bool done = need == 0;
        while (q-- > 0) {
          if (++pick[q] < t) break;
          pick[q] = 0;
          if (q == 0) done = true;
        }
        if (done) break;
      }
    } while (need > 0 && detail::next_combination(idx, chosen.size()));
    return true;
  };

  auto disjoint = [&](std::size_t a, std::size_t b) {
    for (std::size_t x : missing[a])
      for (std::size_t y : missing[b])
        if (x == y) return false;
    return true;
  };

  std::optional<MissingTuple> found;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (chosen.size() == m) {
      MissingTuple out;
      for (std::size_t c : chosen) out.parts.push_back(missing[c]);
      out.vacuous_cliques = m < t;
      found = std::move(out);
      return true;
    }
    for (std::size_t c = from; c < missing.size(); ++c) {
      bool ok = true;
      for (std::size_t prev : chosen)
        if (!disjoint(prev, c)) {
          ok = false;
          break;
        }
      if (!ok || !cross_ok(c)) continue;
      chosen.push_back(c);
      if (self(self, c + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace boxhelly

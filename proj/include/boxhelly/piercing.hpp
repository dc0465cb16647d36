#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "boxhelly/detail/combinatorics.hpp"
#include "boxhelly/geometry.hpp"

namespace boxhelly {

// Ordered family of boxes over a common dimension. May be empty (documents
// allow it); every solver validates non-emptiness itself.
struct Family {
  std::size_t dim = 0;
  std::vector<AxisBox> boxes;
  std::vector<std::string> labels;  // optional; empty or one per box

  Family() = default;
  Family(std::size_t dim_, std::vector<AxisBox> boxes_, std::vector<std::string> labels_ = {})
      : dim(dim_), boxes(std::move(boxes_)), labels(std::move(labels_)) {
    if (dim == 0) throw std::invalid_argument("family with dimension 0");
    for (const AxisBox& b : boxes) require_same_dim(b.dim(), dim);
    if (!labels.empty() && labels.size() != boxes.size())
      throw std::invalid_argument("label count does not match box count");
  }
  static Family of(std::vector<AxisBox> boxes) {
    if (boxes.empty()) throw std::invalid_argument("cannot infer dimension of empty family");
    std::size_t d = boxes.front().dim();
    return Family(d, std::move(boxes));
  }
  std::size_t size() const { return boxes.size(); }

  Family subfamily(const std::vector<std::size_t>& indices) const {
    std::vector<AxisBox> sub;
    sub.reserve(indices.size());
    for (std::size_t i : indices) sub.push_back(boxes.at(i));
    return Family(dim, std::move(sub));
  }
  friend bool operator==(const Family& a, const Family& b) {
    return a.dim == b.dim && a.boxes == b.boxes;
  }
};

// Ordered list of non-empty color classes over a common dimension.
struct ColorSystem {
  std::size_t dim = 0;
  std::vector<Family> classes;

  ColorSystem() = default;
  ColorSystem(std::size_t dim_, std::vector<Family> classes_)
      : dim(dim_), classes(std::move(classes_)) {
    if (classes.empty()) throw std::invalid_argument("color system with no classes");
    for (const Family& f : classes) {
      require_same_dim(f.dim, dim);
      if (f.boxes.empty()) throw std::invalid_argument("color class must be non-empty");
    }
  }
  friend bool operator==(const ColorSystem& a, const ColorSystem& b) {
    return a.dim == b.dim && a.classes == b.classes;
  }
};

enum class Verdict { pierceable, not_pierceable };

// Either a witness point set of size <= n or a violating sub-tuple that is
// itself not n-pierceable (minimal under the solver's breadth-first order,
// or the full index list past the search cap).
struct PiercingCertificate {
  Verdict verdict = Verdict::not_pierceable;
  std::vector<Point> witness;
  std::vector<std::size_t> violation;
};

// h(d, n) when finite: 2 for n=1; n+1 for d=1; 3d / 3d-1 for n=2; 16 for
// (2,3); unbounded otherwise.
inline std::optional<std::size_t> finite_helly_number(std::size_t d, std::size_t n) {
  if (n == 1) return 2;
  if (d == 1) return n + 1;
  if (n == 2) return d % 2 == 1 ? 3 * d : 3 * d - 1;
  if (d == 2 && n == 3) return 16;
  return std::nullopt;
}

namespace detail {

// Exact n-piercability over bitmask-selected subfamilies of a fixed pool of
// at most 64 boxes. All coordinate comparisons happen once at construction
// (rank tables); the candidate-grid search itself is integer-only. Candidate
// points are the grid of per-axis lower endpoints of the selected boxes, and
// the recursion peels off the subfamily missed by each candidate, which
// snapping keeps complete. Not thread-safe; build one engine per thread.
class PierceEngine {
 public:
  explicit PierceEngine(std::vector<AxisBox> boxes)
      : boxes_(std::move(boxes)),
        dim_(boxes_.empty() ? 0 : boxes_.front().dim()),
        memoize_(boxes_.size() <= 24) {
    if (boxes_.size() > 64) throw cap_error("piercing solver capped at 64 boxes");
    build_tables();
  }

  std::size_t size() const { return boxes_.size(); }
  const std::vector<AxisBox>& boxes() const { return boxes_; }
  std::uint64_t full_mask() const {
    return boxes_.size() == 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << boxes_.size()) - 1;
  }

  bool pierceable(std::uint64_t mask, std::size_t n) {
    if (mask == 0) return true;
    if (n == 0) return false;
    if (memoize_) {
      if (memo_.size() <= n) memo_.resize(n + 1);
      auto it = memo_[n].find(mask);
      if (it != memo_[n].end()) return it->second;
    }
    bool result = dim_ == 1 ? greedy_count(mask) <= n
                  : n == 1 ? fold_nonempty(mask)
                           : grid_search(mask, n);
    if (memoize_) memo_[n].emplace(mask, result);
    return result;
  }

  // Witness points in the order the lexicographic grid enumeration finds
  // them; nullopt when the masked subfamily is not n-pierceable.
  std::optional<std::vector<Point>> decide(std::uint64_t mask, std::size_t n) {
    if (mask == 0) return std::vector<Point>{};
    if (!pierceable(mask, n)) return std::nullopt;
    return build_witness(mask, n);
  }

 private:
  struct AxisTable {
    std::vector<Rational> lo_values;           // sorted unique lower endpoints
    std::vector<Rational> hi_values;           // sorted unique upper endpoints
    std::vector<std::uint32_t> lo_rank;        // per box, index into lo_values
    std::vector<std::uint32_t> hi_rank;        // per box, index into hi_values
    std::vector<std::vector<bool>> lo_le_hi;   // lo_values[a] <= hi_values[b]
    std::vector<std::uint64_t> contains_mask;  // per lo value, boxes containing it
  };

  void build_tables() {
    axes_.resize(dim_);
    const std::size_t m = boxes_.size();
    for (std::size_t j = 0; j < dim_; ++j) {
      AxisTable& t = axes_[j];
      for (const AxisBox& b : boxes_) {
        t.lo_values.push_back(b.sides[j].lo);
        t.hi_values.push_back(b.sides[j].hi);
      }
      auto dedup = [](std::vector<Rational>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
      };
      dedup(t.lo_values);
      dedup(t.hi_values);
      t.lo_rank.resize(m);
      t.hi_rank.resize(m);
      for (std::size_t i = 0; i < m; ++i) {
        t.lo_rank[i] = static_cast<std::uint32_t>(
            std::lower_bound(t.lo_values.begin(), t.lo_values.end(), boxes_[i].sides[j].lo) -
            t.lo_values.begin());
        t.hi_rank[i] = static_cast<std::uint32_t>(
            std::lower_bound(t.hi_values.begin(), t.hi_values.end(), boxes_[i].sides[j].hi) -
            t.hi_values.begin());
      }
      t.lo_le_hi.assign(t.lo_values.size(), std::vector<bool>(t.hi_values.size()));
      for (std::size_t a = 0; a < t.lo_values.size(); ++a)
        for (std::size_t b = 0; b < t.hi_values.size(); ++b)
          t.lo_le_hi[a][b] = t.lo_values[a] <= t.hi_values[b];
      t.contains_mask.assign(t.lo_values.size(), 0);
      for (std::size_t a = 0; a < t.lo_values.size(); ++a)
        for (std::size_t i = 0; i < m; ++i)
          if (boxes_[i].sides[j].contains(t.lo_values[a]))
            t.contains_mask[a] |= std::uint64_t{1} << i;
    }
    if (dim_ == 1) {
      by_hi_.resize(m);
      for (std::size_t i = 0; i < m; ++i) by_hi_[i] = i;
      std::sort(by_hi_.begin(), by_hi_.end(), [&](std::size_t a, std::size_t b) {
        if (axes_[0].hi_rank[a] != axes_[0].hi_rank[b])
          return axes_[0].hi_rank[a] < axes_[0].hi_rank[b];
        return a < b;
      });
    }
  }

  // right-endpoint greedy; optimal for intervals
  std::size_t greedy_count(std::uint64_t mask, std::vector<std::uint32_t>* stabs = nullptr) const {
    const AxisTable& t = axes_[0];
    std::size_t count = 0;
    bool have = false;
    std::uint32_t stab = 0;
    for (std::size_t i : by_hi_) {
      if (!(mask >> i & 1)) continue;
      if (have && t.lo_le_hi[t.lo_rank[i]][stab]) continue;  // lo <= stab <= hi
      stab = t.hi_rank[i];
      have = true;
      ++count;
      if (stabs) stabs->push_back(stab);
    }
    return count;
  }

  bool fold_nonempty(std::uint64_t mask) const {
    for (std::size_t j = 0; j < dim_; ++j) {
      const AxisTable& t = axes_[j];
      std::uint32_t max_lo = 0, min_hi = 0;
      bool first = true;
      for (std::uint64_t rest = mask; rest;) {
        std::size_t i = static_cast<std::size_t>(std::countr_zero(rest));
        rest &= rest - 1;
        if (first) {
          max_lo = t.lo_rank[i];
          min_hi = t.hi_rank[i];
          first = false;
        } else {
          max_lo = std::max(max_lo, t.lo_rank[i]);
          min_hi = std::min(min_hi, t.hi_rank[i]);
        }
      }
      if (!t.lo_le_hi[max_lo][min_hi]) return false;
    }
    return true;
  }

  // distinct lower-endpoint ranks of the selected boxes, ascending
  std::vector<std::uint32_t> gather_ranks(std::uint64_t mask, std::size_t j) const {
    std::vector<std::uint32_t> ranks;
    for (std::uint64_t rest = mask; rest;) {
      std::size_t i = static_cast<std::size_t>(std::countr_zero(rest));
      rest &= rest - 1;
      ranks.push_back(axes_[j].lo_rank[i]);
    }
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    return ranks;
  }

  bool grid_search(std::uint64_t mask, std::size_t n) {
    std::vector<std::vector<std::uint32_t>> ranks(dim_);
    for (std::size_t j = 0; j < dim_; ++j) ranks[j] = gather_ranks(mask, j);
    std::vector<std::size_t> pick(dim_, 0);
    while (true) {
      std::uint64_t hit = mask;
      for (std::size_t j = 0; j < dim_; ++j)
        hit &= axes_[j].contains_mask[ranks[j][pick[j]]];
      std::uint64_t missed = mask & ~hit;
      if (missed == 0 || pierceable(missed, n - 1)) return true;
      std::size_t j = dim_;
      while (j-- > 0) {
        if (++pick[j] < ranks[j].size()) break;
        pick[j] = 0;
        if (j == 0) return false;
      }
    }
  }

  // Reruns the successful search, materializing points. Enumeration order is
  // identical to the boolean path, so the witness is the lexicographic first.
  std::optional<std::vector<Point>> build_witness(std::uint64_t mask, std::size_t n) {
    if (mask == 0) return std::vector<Point>{};
    if (n == 0) return std::nullopt;
    if (dim_ == 1) {
      std::vector<std::uint32_t> stabs;
      if (greedy_count(mask, &stabs) > n) return std::nullopt;
      std::vector<Point> witness;
      for (std::uint32_t s : stabs) witness.push_back(Point({axes_[0].hi_values[s]}));
      return witness;
    }
    if (n == 1) {
      if (!fold_nonempty(mask)) return std::nullopt;
      std::vector<Rational> corner;
      corner.reserve(dim_);
      for (std::size_t j = 0; j < dim_; ++j) {
        std::uint32_t max_lo = 0;
        bool first = true;
        for (std::uint64_t rest = mask; rest;) {
          std::size_t i = static_cast<std::size_t>(std::countr_zero(rest));
          rest &= rest - 1;
          if (first || axes_[j].lo_rank[i] > max_lo) max_lo = axes_[j].lo_rank[i];
          first = false;
        }
        corner.push_back(axes_[j].lo_values[max_lo]);
      }
      return std::vector<Point>{Point(std::move(corner))};
    }
    std::vector<std::vector<std::uint32_t>> ranks(dim_);
    for (std::size_t j = 0; j < dim_; ++j) ranks[j] = gather_ranks(mask, j);
    std::vector<std::size_t> pick(dim_, 0);
    while (true) {
      std::uint64_t hit = mask;
      for (std::size_t j = 0; j < dim_; ++j)
        hit &= axes_[j].contains_mask[ranks[j][pick[j]]];
      std::uint64_t missed = mask & ~hit;
      if (missed == 0 || pierceable(missed, n - 1)) {
        std::vector<Rational> coords;
        coords.reserve(dim_);
        for (std::size_t j = 0; j < dim_; ++j)
          coords.push_back(axes_[j].lo_values[ranks[j][pick[j]]]);
        std::vector<Point> witness;
        witness.push_back(Point(std::move(coords)));
        auto sub = build_witness(missed, n - 1);
        if (!sub) throw std::logic_error("witness reconstruction diverged from decision");
        witness.insert(witness.end(), sub->begin(), sub->end());
        return witness;
      }
      std::size_t j = dim_;
      while (j-- > 0) {
        if (++pick[j] < ranks[j].size()) break;
        pick[j] = 0;
        if (j == 0) return std::nullopt;
      }
    }
  }

  std::vector<AxisBox> boxes_;
  std::size_t dim_;
  bool memoize_;
  std::vector<AxisTable> axes_;
  std::vector<std::size_t> by_hi_;  // d=1 greedy order
  std::vector<std::unordered_map<std::uint64_t, bool>> memo_;
};

inline void require_solvable(const Family& f, std::size_t n) {
  if (f.boxes.empty()) throw std::invalid_argument("piercing query on empty family");
  if (n < 1) throw std::invalid_argument("piercing budget must be at least 1");
}

// Breadth-first over subset sizes up to the finite Helly number (or the env
// override); past the cap or the enumeration budget the whole index list is
// the certificate.
inline std::vector<std::size_t> find_violation(PierceEngine& engine, std::size_t n) {
  const std::size_t m = engine.size();
  const std::size_t d = engine.boxes().front().dim();
  auto h = finite_helly_number(d, n);
  std::size_t cap = std::min(effective_cap(h ? std::min(*h, m) : m), m);
  constexpr std::uint64_t kSubsetBudget = 200000;
  std::uint64_t budget = kSubsetBudget;
  for (std::size_t s = 1; s <= cap; ++s) {
    if (binomial(m, s) > budget) break;
    auto idx = first_combination(s);
    do {
      if (budget == 0) break;
      --budget;
      if (!engine.pierceable(mask_of(idx), n)) return idx;
    } while (next_combination(idx, m));
  }
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  return all;
}

}  // namespace detail

// 1-piercing: by the Helly property of boxes the common intersection is
// non-empty iff every pair intersects; witness is the per-axis max of lower
// endpoints. Works for families of any size.
inline PiercingCertificate pierce1(const Family& f) {
  if (f.boxes.empty()) throw std::invalid_argument("piercing query on empty family");
  std::vector<Rational> lo(f.dim), hi(f.dim);
  for (std::size_t j = 0; j < f.dim; ++j) {
    lo[j] = f.boxes.front().sides[j].lo;
    hi[j] = f.boxes.front().sides[j].hi;
  }
  bool empty = false;
  for (std::size_t i = 1; i < f.boxes.size() && !empty; ++i) {
    for (std::size_t j = 0; j < f.dim; ++j) {
      const Interval& s = f.boxes[i].sides[j];
      if (s.lo > lo[j]) lo[j] = s.lo;
      if (s.hi < hi[j]) hi[j] = s.hi;
      if (lo[j] > hi[j]) empty = true;
    }
  }
  PiercingCertificate cert;
  if (!empty) {
    cert.verdict = Verdict::pierceable;
    cert.witness.push_back(Point(std::move(lo)));
    return cert;
  }
  cert.verdict = Verdict::not_pierceable;
  for (std::size_t i = 0; i < f.boxes.size(); ++i)
    for (std::size_t k = i + 1; k < f.boxes.size(); ++k)
      if (!box_intersect(f.boxes[i], f.boxes[k])) {
        cert.violation = {i, k};
        return cert;
      }
  throw std::logic_error("empty intersection without a disjoint pair");
}

struct StabResult {
  std::size_t count = 0;
  std::vector<Point> witness;
};

// Minimum piercing for intervals via the right-endpoint greedy sweep; the
// count is provably minimal in dimension 1.
inline StabResult min_stab_intervals(const Family& f) {
  if (f.boxes.empty()) throw std::invalid_argument("piercing query on empty family");
  if (f.dim != 1) throw std::invalid_argument("min_stab_intervals requires dimension 1");
  std::vector<std::size_t> order(f.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Rational& ha = f.boxes[a].sides[0].hi;
    const Rational& hb = f.boxes[b].sides[0].hi;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  StabResult r;
  bool have = false;
  Rational current;
  for (std::size_t i : order) {
    const Interval& iv = f.boxes[i].sides[0];
    if (have && iv.lo <= current) continue;  // already stabbed
    current = iv.hi;
    have = true;
    r.witness.push_back(Point({current}));
  }
  r.count = r.witness.size();
  return r;
}

// Exact n-piercability decision with witness or violating sub-tuple.
inline PiercingCertificate pierce_n(const Family& f, std::size_t n) {
  detail::require_solvable(f, n);
  if (f.dim == 1) {
    auto stab = min_stab_intervals(f);
    PiercingCertificate cert;
    if (stab.count <= n) {
      cert.verdict = Verdict::pierceable;
      cert.witness = std::move(stab.witness);
      return cert;
    }
    detail::PierceEngine engine(f.boxes);
    cert.verdict = Verdict::not_pierceable;
    cert.violation = detail::find_violation(engine, n);
    return cert;
  }
  if (n == 1) return pierce1(f);
  detail::PierceEngine engine(f.boxes);
  auto witness = engine.decide(engine.full_mask(), n);
  PiercingCertificate cert;
  if (witness) {
    cert.verdict = Verdict::pierceable;
    cert.witness = std::move(*witness);
    return cert;
  }
  cert.verdict = Verdict::not_pierceable;
  cert.violation = detail::find_violation(engine, n);
  return cert;
}

// Verdict-only convenience used by premise checks and hypergraph edge queries.
inline bool n_pierceable(const Family& f, std::size_t n) {
  detail::require_solvable(f, n);
  if (f.dim == 1) return min_stab_intervals(f).count <= n;
  if (n == 1) return pierce1(f).verdict == Verdict::pierceable;
  detail::PierceEngine engine(f.boxes);
  return engine.pierceable(engine.full_mask(), n);
}

// Lexicographic stream over all one-box-per-class index tuples.
class ColorfulTupleStream {
 public:
  explicit ColorfulTupleStream(const ColorSystem& c) : system_(&c) {
    for (const Family& cls : c.classes)
      if (cls.boxes.empty()) throw std::invalid_argument("color class must be non-empty");
    current_.assign(c.classes.size(), 0);
  }

  // Fills `tuple` with the next index tuple; false once exhausted.
  bool next(std::vector<std::size_t>& tuple) {
    if (done_) return false;
    tuple = current_;
    std::size_t j = current_.size();
    while (j-- > 0) {
      if (++current_[j] < system_->classes[j].boxes.size()) return true;
      current_[j] = 0;
      if (j == 0) done_ = true;
    }
    return true;
  }

  std::uint64_t total() const {
    std::uint64_t t = 1;
    for (const Family& cls : system_->classes) t *= cls.boxes.size();
    return t;
  }

 private:
  const ColorSystem* system_;
  std::vector<std::size_t> current_;
  bool done_ = false;
};

inline Family tuple_family(const ColorSystem& c, const std::vector<std::size_t>& tuple) {
  std::vector<AxisBox> boxes;
  boxes.reserve(tuple.size());
  for (std::size_t k = 0; k < tuple.size(); ++k)
    boxes.push_back(c.classes[k].boxes.at(tuple[k]));
  return Family(c.dim, std::move(boxes));
}

// Runs the piercing decision over every colorful tuple; returns the
// lexicographically first violating tuple, or nullopt when all pass. Classes
// are pooled into one engine so coordinate ranks are computed once.
inline std::optional<std::vector<std::size_t>> check_all_colorful(const ColorSystem& c,
                                                                  std::size_t n) {
  if (n < 1) throw std::invalid_argument("piercing budget must be at least 1");
  std::size_t total = 0;
  for (const Family& cls : c.classes) total += cls.size();
  ColorfulTupleStream stream(c);
  std::vector<std::size_t> tuple;
  if (total <= 64) {
    std::vector<AxisBox> pool;
    std::vector<std::size_t> offset;
    pool.reserve(total);
    for (const Family& cls : c.classes) {
      offset.push_back(pool.size());
      pool.insert(pool.end(), cls.boxes.begin(), cls.boxes.end());
    }
    detail::PierceEngine engine(std::move(pool));
    while (stream.next(tuple)) {
      std::uint64_t mask = 0;
      for (std::size_t k = 0; k < tuple.size(); ++k)
        mask |= std::uint64_t{1} << (offset[k] + tuple[k]);
      if (!engine.pierceable(mask, n)) return tuple;
    }
    return std::nullopt;
  }
  while (stream.next(tuple))
    if (!n_pierceable(tuple_family(c, tuple), n)) return tuple;
  return std::nullopt;
}

struct IntervalColorfulWitness {
  std::size_t pierceable_class = 0;
  // one (class, box) representative for every class other than
  // pierceable_class, ascending by class index
  std::vector<std::pair<std::size_t, std::size_t>> representatives;
  std::vector<Point> witness;
  bool every_pair_intersects = false;  // which proof case produced it
  std::size_t disjoint_rank = 0;       // r in the greedy-maxima case
};

namespace detail {

// All pairwise-disjoint colorful r-tuples, each sorted by interval order.
// Elements are (class, box) pairs.
inline void collect_disjoint_tuples(
    const ColorSystem& c, std::size_t r,
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& out) {
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  auto disjoint_with_all = [&](const AxisBox& b) {
    for (auto& [cls, idx] : chosen)
      if (box_intersect(c.classes[cls].boxes[idx], b)) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() == r) {
      auto sorted = chosen;
      std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
        const Rational& la = c.classes[a.first].boxes[a.second].sides[0].lo;
        const Rational& lb = c.classes[b.first].boxes[b.second].sides[0].lo;
        if (la != lb) return la < lb;
        return a < b;
      });
      out.push_back(std::move(sorted));
      return;
    }
    for (std::size_t cls = from; cls < c.classes.size(); ++cls) {
      if (c.classes.size() - cls < r - chosen.size()) break;
      for (std::size_t idx = 0; idx < c.classes[cls].boxes.size(); ++idx) {
        if (!disjoint_with_all(c.classes[cls].boxes[idx])) continue;
        chosen.emplace_back(cls, idx);
        self(self, cls + 1);
        chosen.pop_back();
      }
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// Constructive witness for the interval colorful Helly theorem: given n+1
// classes of intervals whose every colorful (n+1)-tuple is n-pierceable,
// produces a class i, one representative per other class, and <= n points
// piercing the extended family. Follows the two proof cases: common points
// when all colorful pairs meet, otherwise the greedy left-endpoint maxima
// a_1..a_r over nested collections of pairwise disjoint colorful tuples.
inline IntervalColorfulWitness interval_colorful_witness(const ColorSystem& c, std::size_t n) {
  if (n < 1) throw std::invalid_argument("piercing budget must be at least 1");
  if (c.dim != 1) throw std::invalid_argument("interval_colorful_witness requires dimension 1");
  if (c.classes.size() != n + 1)
    throw std::invalid_argument("interval_colorful_witness requires exactly n+1 classes");
  if (auto bad = check_all_colorful(c, n))
    throw premise_error("a colorful tuple is not n-pierceable", *bad);

  const std::size_t t = c.classes.size();
  IntervalColorfulWitness result;

  bool all_pairs_meet = true;
  for (std::size_t a = 0; a + 1 < t && all_pairs_meet; ++a)
    for (std::size_t b = a + 1; b < t && all_pairs_meet; ++b)
      for (const AxisBox& x : c.classes[a].boxes) {
        for (const AxisBox& y : c.classes[b].boxes)
          if (!box_intersect(x, y)) {
            all_pairs_meet = false;
            break;
          }
        if (!all_pairs_meet) break;
      }

  auto fold_interval = [](const std::vector<AxisBox>& boxes) -> std::optional<Interval> {
    Rational lo = boxes.front().sides[0].lo;
    Rational hi = boxes.front().sides[0].hi;
    for (const AxisBox& b : boxes) {
      if (b.sides[0].lo > lo) lo = b.sides[0].lo;
      if (b.sides[0].hi < hi) hi = b.sides[0].hi;
    }
    if (lo > hi) return std::nullopt;
    return Interval(lo, hi);
  };

  if (all_pairs_meet) {
    result.every_pair_intersects = true;
    std::optional<std::size_t> cls_with_core;
    std::optional<Interval> core;
    for (std::size_t i = 0; i < t; ++i)
      if (auto fold = fold_interval(c.classes[i].boxes)) {
        cls_with_core = i;
        core = fold;
        break;
      }
    if (!cls_with_core)
      throw validation_error("no class has a common point despite pairwise intersection", 0);
    result.pierceable_class = *cls_with_core;
    std::vector<AxisBox> reps;
    for (std::size_t k = 0; k < t; ++k) {
      if (k == *cls_with_core) continue;
      result.representatives.emplace_back(k, 0);
      reps.push_back(c.classes[k].boxes[0]);
    }
    if (n == 1) {
      // the representative meets every member of the class, hence its core
      auto shared = interval_intersect(*core, reps.front().sides[0]);
      if (!shared) throw validation_error("representative misses the class core", 0);
      result.witness.push_back(Point({shared->lo}));
    } else {
      auto rep_core = fold_interval(reps);
      if (!rep_core)
        throw validation_error("representatives have no common point", 0);
      result.witness.push_back(Point({core->lo}));
      if (rep_core->lo != core->lo) result.witness.push_back(Point({rep_core->lo}));
    }
  } else {
    // largest pairwise-disjoint colorful tuple
    std::size_t r = 0;
    for (std::size_t s = std::min(n, t); s >= 2; --s) {
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tuples;
      detail::collect_disjoint_tuples(c, s, tuples);
      if (!tuples.empty()) {
        r = s;
        break;
      }
    }
    if (r == 0) throw std::logic_error("disjoint pair exists but rank search found none");
    result.disjoint_rank = r;

    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> collection;
    detail::collect_disjoint_tuples(c, r, collection);
    std::vector<std::pair<std::size_t, std::size_t>> picked;  // J_1..J_r
    std::vector<Rational> maxima;                             // a_1..a_r
    for (std::size_t step = 0; step < r; ++step) {
      const Rational* best = nullptr;
      for (auto& tup : collection) {
        const Rational& lo = c.classes[tup[step].first].boxes[tup[step].second].sides[0].lo;
        if (!best || lo > *best) best = &lo;
      }
      std::optional<std::pair<std::size_t, std::size_t>> j;
      for (auto& tup : collection) {
        const Rational& lo = c.classes[tup[step].first].boxes[tup[step].second].sides[0].lo;
        if (lo == *best && (!j || tup[step] < *j)) j = tup[step];
      }
      maxima.push_back(*best);
      picked.push_back(*j);
      std::erase_if(collection, [&](const auto& tup) { return tup[step] != *j; });
    }

    std::vector<bool> used(t, false);
    for (auto& [cls, idx] : picked) used[cls] = true;
    std::size_t i = 0;
    while (used[i]) ++i;
    result.pierceable_class = i;
    for (std::size_t k = 0; k < t; ++k) {
      if (k == i) continue;
      if (used[k]) {
        for (auto& p : picked)
          if (p.first == k) result.representatives.emplace_back(k, p.second);
      } else {
        result.representatives.emplace_back(k, 0);
      }
    }
    std::sort(result.representatives.begin(), result.representatives.end());
    for (const Rational& a : maxima) result.witness.push_back(Point({a}));
  }

  // postcondition: every box of class i and every representative is hit
  auto hit = [&](const AxisBox& b) {
    for (const Point& p : result.witness)
      if (contains_point(b, p)) return true;
    return false;
  };
  for (std::size_t idx = 0; idx < c.classes[result.pierceable_class].boxes.size(); ++idx)
    if (!hit(c.classes[result.pierceable_class].boxes[idx]))
      throw validation_error("witness misses a box of the pierceable class", idx);
  for (auto& [cls, idx] : result.representatives)
    if (!hit(c.classes[cls].boxes[idx]))
      throw validation_error("witness misses a representative", cls);
  return result;
}

}  // namespace boxhelly

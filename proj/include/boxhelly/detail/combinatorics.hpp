#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace boxhelly::detail {

// Advances idx (strictly increasing positions into [0, m)) to the next
// k-combination in lexicographic order; false once exhausted.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  const std::size_t k = idx.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i-- > 0) {
    if (idx[i] != m - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

// C(m, k), saturating at uint64 max on overflow.
inline std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  if (k > m - k) k = m - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t factor = m - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor)
      return std::numeric_limits<std::uint64_t>::max();
    result = result * factor / i;
  }
  return result;
}

inline std::uint64_t mask_of(const std::vector<std::size_t>& idx) {
  std::uint64_t m = 0;
  for (std::size_t i : idx) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace boxhelly::detail

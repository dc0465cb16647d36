#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace boxhelly {

// Malformed input text (documents, rational literals). Carries whatever
// position context the parser had.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exhaustive search would exceed its size cap.
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A theorem-premise precondition failed; carries the violating tuple
// (one box index per color class).
struct premise_error : std::runtime_error {
  std::vector<std::size_t> violating_tuple;
  premise_error(const std::string& what, std::vector<std::size_t> tuple)
      : std::runtime_error(what), violating_tuple(std::move(tuple)) {}
};

// A certificate failed its own re-validation. Surfaced, never patched over.
struct validation_error : std::runtime_error {
  std::size_t offending_index;
  validation_error(const std::string& what, std::size_t index)
      : std::runtime_error(what), offending_index(index) {}
};

// HELLY_PIERCER_CAP overrides every internal search cap when set.
inline std::size_t effective_cap(std::size_t default_cap) {
  if (const char* env = std::getenv("HELLY_PIERCER_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return default_cap;
}

}  // namespace boxhelly

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homcount {

/// Malformed or inconsistent input (file syntax, violated preconditions).
class input_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured work or memory bound would be exceeded.
class bound_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (divisibility, count mismatch).
class verification_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Explicit work bounds. Exact counting never truncates; exceeding a bound
/// raises bound_exceeded instead.
struct WorkBounds {
  std::uint64_t max_enumeration = 400'000'000;
  std::uint64_t max_states = 20'000'000;
  std::size_t max_group_order = 120;
  std::size_t max_closure_order = 100'000;
  std::uint64_t max_orbit_points = 5'000'000;
};

} // namespace homcount

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace pds {

// All schedule quantities are whole minutes.
using Minutes = std::int64_t;

// Sentinel for an infeasible drone group size. Never add or compare it
// arithmetically; test with is_infinite() first.
inline constexpr Minutes kInfinity = std::numeric_limits<Minutes>::max();

inline constexpr bool is_infinite(Minutes t) { return t == kInfinity; }

// Vertex 0 is the depot, customers are 1..n.
using Vertex = int;
inline constexpr Vertex kDepot = 0;

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Raised for malformed inputs (files, configs) and contract breaches.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation is asked to work past a documented size cap.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pds

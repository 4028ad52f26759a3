#pragma once

#include <array>
#include <cstdint>

namespace spackd {

/// The integer distance graph G(k,t): vertices are the integers, and two
/// integers are adjacent when they differ by exactly k or t.
class DistanceGraphSpec {
 public:
  /// Throws Error(kInvalidSpec) unless 1 <= k < t.
  DistanceGraphSpec(std::int64_t k, std::int64_t t);

  std::int64_t k() const noexcept { return k_; }
  std::int64_t t() const noexcept { return t_; }

  /// True iff gcd(k,t) = 1, which is exactly when the graph is connected.
  bool connected() const noexcept;

  /// Throws Error(kNotConnected) for a disconnected spec.
  void require_connected() const;

  friend bool operator==(const DistanceGraphSpec&,
                         const DistanceGraphSpec&) = default;

 private:
  std::int64_t k_;
  std::int64_t t_;
};

struct ReducedSpec {
  DistanceGraphSpec spec;
  std::int64_t scale;  // gcd of the original pair
};

/// Divides out gcd(k,t). Every component of G(k,t) is a copy of the reduced
/// graph, so chromatic-type invariants are unchanged.
ReducedSpec reduce_spec(std::int64_t k, std::int64_t t);

/// A point of the shifted grid {0..t} x Z. Point (i,j) represents the integer
/// j*t + i*k; column t duplicates column 0 shifted down by k rows.
struct GridPoint {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// {n-t, n-k, n+k, n+t} in ascending order.
std::array<std::int64_t, 4> neighbors(std::int64_t n,
                                      const DistanceGraphSpec& spec);

/// Canonical representative with 0 <= i <= t-1. Requires a connected spec.
GridPoint int_to_point(std::int64_t n, const DistanceGraphSpec& spec);

/// j*t + i*k for 0 <= i <= t. Overflow is reported as Error(kOverflow).
std::int64_t point_to_int(GridPoint p, const DistanceGraphSpec& spec);

/// Graph distance in G(k,t): the minimum of |a| + |b| over integer solutions
/// of a*k + b*t = to - from. Requires a connected spec.
std::int64_t exact_distance(std::int64_t from, std::int64_t to,
                            const DistanceGraphSpec& spec);

/// Shifted-grid distance between two canonical points: the direct Manhattan
/// term and the two wrap terms through the glued column pair (0, t). Always an
/// upper bound on exact_distance, and equal to it whenever the result is <= 2
/// and t >= 3.
std::int64_t grid_distance(GridPoint p, GridPoint q,
                           const DistanceGraphSpec& spec);

// Small integer helpers shared across modules.
std::int64_t floor_mod(std::int64_t a, std::int64_t m);
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace spackd

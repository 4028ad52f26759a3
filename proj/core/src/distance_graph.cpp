#include "spackd/distance_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

#include "spackd/error.hpp"

namespace spackd {
namespace {

__extension__ using Int128 = __int128;

// (a * b) mod m for 0 <= a, b < m.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<Int128>(a) * b % m);
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidSpec: return "invalid-spec";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kNotConnected: return "not-connected";
    case ErrorKind::kInvalidPoint: return "invalid-point";
    case ErrorKind::kOverflow: return "overflow";
    case ErrorKind::kMalformedSequence: return "malformed-sequence";
    case ErrorKind::kIndex: return "index";
    case ErrorKind::kInvalidSchema: return "invalid-schema";
    case ErrorKind::kWrongFamily: return "wrong-family";
    case ErrorKind::kTooSmall: return "too-small";
    case ErrorKind::kUnsupportedSequence: return "unsupported-sequence";
    case ErrorKind::kUnsupportedFamily: return "unsupported-family";
    case ErrorKind::kInvalidColor: return "invalid-color";
    case ErrorKind::kConstructiveOutOfScope: return "constructive-out-of-scope";
    case ErrorKind::kSizeLimit: return "size-limit";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  // Extended Euclid on (a mod m, m).
  std::int64_t old_r = floor_mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) {
    throw Error(ErrorKind::kNotConnected,
                std::to_string(a) + " has no inverse modulo " +
                    std::to_string(m));
  }
  return floor_mod(old_s, m);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::kOverflow, "integer overflow in addition");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::kOverflow, "integer overflow in multiplication");
  }
  return out;
}

DistanceGraphSpec::DistanceGraphSpec(std::int64_t k, std::int64_t t)
    : k_(k), t_(t) {
  if (k < 1 || k >= t) {
    throw Error(ErrorKind::kInvalidSpec,
                "distance graph needs 1 <= k < t, got k=" + std::to_string(k) +
                    " t=" + std::to_string(t));
  }
}

bool DistanceGraphSpec::connected() const noexcept {
  return std::gcd(k_, t_) == 1;
}

void DistanceGraphSpec::require_connected() const {
  if (!connected()) {
    throw Error(ErrorKind::kNotConnected,
                "G(" + std::to_string(k_) + "," + std::to_string(t_) +
                    ") is not connected (gcd " +
                    std::to_string(std::gcd(k_, t_)) + ")");
  }
}

ReducedSpec reduce_spec(std::int64_t k, std::int64_t t) {
  const DistanceGraphSpec original(k, t);
  const std::int64_t g = std::gcd(original.k(), original.t());
  return ReducedSpec{DistanceGraphSpec(k / g, t / g), g};
}

std::array<std::int64_t, 4> neighbors(std::int64_t n,
                                      const DistanceGraphSpec& spec) {
  return {checked_add(n, -spec.t()), checked_add(n, -spec.k()),
          checked_add(n, spec.k()), checked_add(n, spec.t())};
}

GridPoint int_to_point(std::int64_t n, const DistanceGraphSpec& spec) {
  spec.require_connected();
  const std::int64_t t = spec.t();
  const std::int64_t k_inv = mod_inverse(spec.k(), t);
  // n * k^{-1} mod t without overflowing for large n.
  const std::int64_t i = mul_mod(floor_mod(n, t), k_inv, t);
  const std::int64_t rest = checked_add(n, -checked_mul(i, spec.k()));
  return GridPoint{i, rest / t};
}

std::int64_t point_to_int(GridPoint p, const DistanceGraphSpec& spec) {
  if (p.i < 0 || p.i > spec.t()) {
    throw Error(ErrorKind::kInvalidPoint,
                "column " + std::to_string(p.i) + " outside [0, " +
                    std::to_string(spec.t()) + "]");
  }
  return checked_add(checked_mul(p.j, spec.t()), checked_mul(p.i, spec.k()));
}

std::int64_t exact_distance(std::int64_t from, std::int64_t to,
                            const DistanceGraphSpec& spec) {
  spec.require_connected();
  const std::int64_t k = spec.k();
  const std::int64_t t = spec.t();
  const std::int64_t delta = checked_add(to, -from);
  if (delta == 0) return 0;

  // The cost |a| + |delta - a*k| / t is convex in a with kinks at 0 and
  // delta/k, so the optimum over the residue class a = a0 (mod t) lies within
  // one period of the interval between them.
  const std::int64_t a0 = mul_mod(floor_mod(delta, t), mod_inverse(k, t), t);
  const std::int64_t lo = std::min<std::int64_t>(0, delta / k) - t;
  const std::int64_t hi = std::max<std::int64_t>(0, delta / k) + t;
  std::int64_t a = lo + floor_mod(a0 - lo, t);
  std::int64_t best = -1;
  for (; a <= hi; a += t) {
    const std::int64_t rem = delta - a * k;
    const std::int64_t cost = std::abs(a) + std::abs(rem / t);
    if (best < 0 || cost < best) best = cost;
  }
  return best;
}

std::int64_t grid_distance(GridPoint p, GridPoint q,
                           const DistanceGraphSpec& spec) {
  const std::int64_t t = spec.t();
  const std::int64_t k = spec.k();
  const std::int64_t direct = std::abs(p.i - q.i) + std::abs(p.j - q.j);
  const std::int64_t wrap_pq = p.i + (t - q.i) + std::abs((p.j - k) - q.j);
  const std::int64_t wrap_qp = q.i + (t - p.i) + std::abs((q.j - k) - p.j);
  return std::min({direct, wrap_pq, wrap_qp});
}

}  // namespace spackd

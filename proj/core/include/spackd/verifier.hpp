#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "spackd/distance_graph.hpp"
#include "spackd/schema.hpp"
#include "spackd/sequence.hpp"

namespace spackd {

enum class ViolationKind { kPairTooClose, kCongruence, kPatternMismatch, kWrap };

std::string_view to_string(ViolationKind kind);

/// The first violation found in a fixed scan order. For pair kinds, `a` and
/// `b` are the two integers, `required` is the smallest admissible distance
/// s_color + 1, and `actual` is exact_distance(a, b). For kCongruence, `a` is
/// the shift sum, `b` is k, and `required` is the modulus.
struct Violation {
  ViolationKind kind = ViolationKind::kPairTooClose;
  std::int64_t a = 0;
  std::int64_t b = 0;
  int color = 0;
  std::int64_t required = 0;
  std::int64_t actual = 0;
};

struct VerificationReport {
  std::optional<Violation> violation;

  bool valid() const noexcept { return !violation.has_value(); }
};

/// Explicit finite coloring: integer -> color.
using ExplicitColoring = std::map<std::int64_t, int>;

/// Decides whether the schema is an S-packing coloring of the infinite graph.
/// Supports sequences whose elements are all <= 2 (Error(kUnsupportedSequence)
/// otherwise).
///
/// Checks every pair of points at grid distance <= 2 in the strip extended by
/// one column past B_t (so that pairs straddling the seam, B_{t-1} against
/// B_1, are seen directly). Each column pair is scanned over one common period
/// of its two patterns. When the gluing congruence fails, close pairs among
/// B_0..B_{t-1} are reported first and kCongruence otherwise.
VerificationReport verify_schema(const ColoringSchema& schema,
                                 const PackingSequence& seq);

/// Checks every pair in the assignment against full-graph distances of
/// G(k,t). Colors < 1 raise Error(kInvalidColor).
VerificationReport verify_explicit(const ExplicitColoring& coloring,
                                   const DistanceGraphSpec& spec,
                                   const PackingSequence& seq);

/// Verifies a parametric family for every admissible t at once. All 3-column
/// windows that can occur (cyclically, through the glued columns B_t and
/// B_{t+1} = B_1) are enumerated from instances with 1..4 tail repetitions past
/// the minimum, which already exhibit every window; the gluing congruence is
/// checked symbolically from the family's residues, since the shift sum is
/// affine in t.
VerificationReport verify_family(const SchemaFamily& family,
                                 const PackingSequence& seq);

}  // namespace spackd

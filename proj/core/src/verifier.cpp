#include "spackd/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "spackd/error.hpp"

namespace spackd {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kPairTooClose: return "pair-too-close";
    case ViolationKind::kCongruence: return "congruence";
    case ViolationKind::kPatternMismatch: return "pattern-mismatch";
    case ViolationKind::kWrap: return "wrap";
  }
  return "unknown";
}

namespace {

void require_small_sequence(const PackingSequence& seq) {
  if (seq.max_element() > 2) {
    throw Error(ErrorKind::kUnsupportedSequence,
                "schema verification supports sequence elements <= 2, got " +
                    seq.to_string());
  }
}

int color_in(const ColumnView& col, std::int64_t row) {
  const auto d = static_cast<std::int64_t>(col.pattern->size());
  return col.pattern->colors[static_cast<std::size_t>(floor_mod(col.reference_row - row, d))];
}

// A same-colored pair of strip cells closer than the sequence allows.
struct StripConflict {
  std::size_t col_a;
  std::int64_t row_a;
  std::size_t col_b;
  std::int64_t row_b;
  int color;
  std::int64_t grid;
};

struct Offset {
  std::int64_t dx;
  std::int64_t dy;
};

// Every unordered pair at Manhattan distance 1 or 2, listed once.
constexpr Offset kForwardOffsets[] = {{0, 1}, {0, 2}, {1, -1}, {1, 0},
                                      {1, 1}, {2, 0}};

// Scans pairs whose first cell lies in a column of [first, last] and whose
// second cell lies anywhere in the strip. Columns are periodic, so one common
// period of the two patterns covers every row offset.
std::optional<StripConflict> scan_strip(std::span<const ColumnView> strip,
                                        std::size_t first, std::size_t last,
                                        const PackingSequence& seq) {
  for (std::size_t x = first; x <= last && x < strip.size(); ++x) {
    for (const Offset& off : kForwardOffsets) {
      const std::size_t x2 = x + static_cast<std::size_t>(off.dx);
      if (x2 >= strip.size()) continue;
      const auto period = std::lcm(static_cast<std::int64_t>(strip[x].pattern->size()),
                                   static_cast<std::int64_t>(strip[x2].pattern->size()));
      const std::int64_t grid = off.dx + std::abs(off.dy);
      for (std::int64_t y = 0; y < period; ++y) {
        const int c = color_in(strip[x], y);
        if (c != color_in(strip[x2], y + off.dy)) continue;
        if (grid <= seq.at(static_cast<std::size_t>(c))) {
          return StripConflict{x, y, x2, y + off.dy, c, grid};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<ColumnView> window_views(const SchemaFamily& family,
                                     const std::vector<FamilyStep>& steps,
                                     std::size_t start) {
  std::vector<ColumnView> views;
  std::int64_t ref = 0;
  for (std::size_t w = 0; w < 3; ++w) {
    const FamilyStep& step = steps[(start + w) % steps.size()];
    const auto it = std::find_if(family.patterns.begin(), family.patterns.end(),
                                 [&](const NamedPattern& p) { return p.name == step.pattern; });
    if (it == family.patterns.end()) {
      throw Error(ErrorKind::kInvalidSchema,
                  "family " + family.name + " uses unknown pattern '" + step.pattern + "'");
    }
    views.push_back({&it->pattern, ref});
    ref -= step.shift;
  }
  return views;
}

}  // namespace

VerificationReport verify_schema(const ColoringSchema& schema,
                                 const PackingSequence& seq) {
  require_small_sequence(seq);
  const DistanceGraphSpec& spec = schema.spec();
  spec.require_connected();

  // Columns B_0..B_t plus B_{t+1}, the copy of B_1 hanging off the seam.
  const std::int64_t t = spec.t();
  std::vector<ColumnView> strip;
  std::int64_t ref = 0;
  for (std::int64_t x = 0; x <= t + 1; ++x) {
    const std::int64_t col = x == t + 1 ? 1 : x;
    strip.push_back({&schema.column_pattern(col), ref});
    ref = checked_add(ref, -schema.shifts()[static_cast<std::size_t>(x % t)]);
  }

  // Without the congruence the seam columns are not well defined, but a close
  // pair among the canonical columns B_0..B_{t-1} is still a concrete witness.
  const CongruenceCheck cong = congruence_check(schema);
  const std::span<const ColumnView> scanned =
      cong.ok ? std::span<const ColumnView>(strip)
              : std::span<const ColumnView>(strip).first(static_cast<std::size_t>(t));
  const auto conflict = scan_strip(scanned, 0, static_cast<std::size_t>(t - 1), seq);
  if (!conflict) {
    if (cong.ok) return {};
    return {Violation{cong.same_pattern ? ViolationKind::kCongruence
                                        : ViolationKind::kPatternMismatch,
                      cong.shift_sum, spec.k(), 0, cong.modulus, cong.sum_residue}};
  }

  const auto as_int = [&](std::size_t col, std::int64_t row) {
    return checked_add(checked_mul(row, t), checked_mul(static_cast<std::int64_t>(col), spec.k()));
  };
  Violation v;
  v.kind = conflict->col_b == static_cast<std::size_t>(t + 1) ? ViolationKind::kWrap
                                                              : ViolationKind::kPairTooClose;
  v.a = as_int(conflict->col_a, conflict->row_a);
  v.b = as_int(conflict->col_b, conflict->row_b);
  v.color = conflict->color;
  v.required = seq.at(static_cast<std::size_t>(conflict->color)) + 1;
  v.actual = exact_distance(v.a, v.b, spec);
  return {v};
}

VerificationReport verify_explicit(const ExplicitColoring& coloring,
                                   const DistanceGraphSpec& spec,
                                   const PackingSequence& seq) {
  spec.require_connected();
  for (const auto& [n, c] : coloring) {
    if (c < 1) {
      throw Error(ErrorKind::kInvalidColor,
                  "vertex " + std::to_string(n) + " has color " + std::to_string(c));
    }
  }
  // Distance grows at least like |delta| / t, so only deltas up to
  // t * max(s_i) can violate anything.
  const std::int64_t reach = checked_mul(spec.t(), seq.max_element());
  std::unordered_map<std::int64_t, std::int64_t> dist_cache;
  const auto dist = [&](std::int64_t delta) {
    auto it = dist_cache.find(delta);
    if (it == dist_cache.end()) {
      it = dist_cache.emplace(delta, exact_distance(0, delta, spec)).first;
    }
    return it->second;
  };

  for (auto a = coloring.begin(); a != coloring.end(); ++a) {
    for (auto b = std::next(a); b != coloring.end(); ++b) {
      const std::int64_t delta = b->first - a->first;
      if (delta > reach) break;
      if (a->second != b->second) continue;
      const int s = seq.at(static_cast<std::size_t>(a->second));
      const std::int64_t d = dist(delta);
      if (d <= s) {
        return {Violation{ViolationKind::kPairTooClose, a->first, b->first, a->second,
                          static_cast<std::int64_t>(s) + 1, d}};
      }
    }
  }
  return {};
}

VerificationReport verify_family(const SchemaFamily& family,
                                 const PackingSequence& seq) {
  require_small_sequence(seq);
  if (family.modulus < 1) {
    throw Error(ErrorKind::kUnsupportedFamily, "family modulus must be positive");
  }
  const auto head = static_cast<std::int64_t>(family.head.size());
  const FamilyStep& first = family.head.empty() ? family.tail : family.head.front();
  const auto base = std::find_if(family.patterns.begin(), family.patterns.end(),
                                 [&](const NamedPattern& p) { return p.name == first.pattern; });
  if (base == family.patterns.end()) {
    throw Error(ErrorKind::kInvalidSchema, "family " + family.name + " uses unknown pattern");
  }
  const auto d0 = static_cast<std::int64_t>(base->pattern.size());
  if (family.modulus % d0 != 0) {
    throw Error(ErrorKind::kUnsupportedFamily,
                "family " + family.name + ": modulus " + std::to_string(family.modulus) +
                    " does not determine sums modulo the base pattern length " +
                    std::to_string(d0));
  }

  // The shift sum is head_sum + tail_shift * (t - head); its residue modulo d0
  // depends only on t mod d0.
  std::int64_t head_sum = 0;
  for (const auto& step : family.head) head_sum += step.shift;
  const std::int64_t sum_residue =
      floor_mod(head_sum + family.tail.shift * (family.t_residue - head), d0);
  if (sum_residue != floor_mod(family.k_residue, d0)) {
    return {Violation{ViolationKind::kCongruence, sum_residue, family.k_residue, 0, d0,
                      sum_residue}};
  }

  // Admissible t in increasing order until the tail repeats at least three
  // times; beyond that no new window appears.
  std::int64_t t = std::max<std::int64_t>(family.min_t, head + 1);
  t += floor_mod(family.t_residue - t, family.modulus);
  for (;; t += family.modulus) {
    const std::vector<FamilyStep> steps = family_columns(family, t);
    for (std::size_t start = 0; start < steps.size(); ++start) {
      const std::vector<ColumnView> views = window_views(family, steps, start);
      const auto conflict = scan_strip(views, 0, views.size() - 1, seq);
      if (!conflict) continue;

      // Report the conflict at concrete integers of an instance when one with
      // a connected spec exists at this t.
      Violation v;
      v.kind = ViolationKind::kPairTooClose;
      v.color = conflict->color;
      v.required = seq.at(static_cast<std::size_t>(conflict->color)) + 1;
      v.actual = conflict->grid;
      for (std::int64_t k = family.k_residue == 0 ? family.modulus : family.k_residue; k < t;
           k += family.modulus) {
        if (std::gcd(k, t) != 1) continue;
        std::int64_t base_row = 0;
        for (std::size_t i = 0; i < start; ++i) base_row -= steps[i].shift;
        const auto col = [&](std::size_t w) { return static_cast<std::int64_t>(start + w); };
        v.a = col(conflict->col_a) * k + (base_row + conflict->row_a) * t;
        v.b = col(conflict->col_b) * k + (base_row + conflict->row_b) * t;
        v.actual = exact_distance(v.a, v.b, DistanceGraphSpec(k, t));
        if (col(conflict->col_b) > t) v.kind = ViolationKind::kWrap;
        break;
      }
      return {v};
    }
    if (t - head >= 3) break;
  }
  return {};
}

}  // namespace spackd

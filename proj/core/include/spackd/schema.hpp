#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spackd/distance_graph.hpp"

namespace spackd {

/// A periodic column pattern [c_1, ..., c_d], applied downwards from the
/// column's reference point and repeated in both directions.
struct Pattern {
  std::vector<int> colors;

  std::size_t size() const noexcept { return colors.size(); }
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct NamedPattern {
  std::string name;
  Pattern pattern;

  friend bool operator==(const NamedPattern&, const NamedPattern&) = default;
};

/// A finite certificate for a coloring of the whole of G(k,t): one pattern per
/// column B_0..B_{t-1} plus the shift sequence p_0..p_{t-1}. Column B_t is not
/// stored; it reuses B_0's pattern. The reference point of B_0 is (0,0).
class ColoringSchema {
 public:
  /// Validates: t column names that all resolve, t non-negative shifts each
  /// below the longest pattern length, non-empty patterns with colors >= 1,
  /// unique pattern names. Throws Error(kInvalidSchema).
  ColoringSchema(DistanceGraphSpec spec, std::vector<NamedPattern> patterns,
                 const std::vector<std::string>& columns,
                 std::vector<std::int64_t> shifts);

  const DistanceGraphSpec& spec() const noexcept { return spec_; }
  const std::vector<NamedPattern>& patterns() const noexcept { return patterns_; }
  const std::vector<std::int64_t>& shifts() const noexcept { return shifts_; }

  /// Pattern used by column x, 0 <= x <= t (column t reuses column 0).
  const Pattern& column_pattern(std::int64_t x) const;
  const std::string& column_name(std::int64_t x) const;
  std::vector<std::string> column_names() const;

  std::size_t max_pattern_length() const noexcept;
  /// Number of distinct colors appearing in the patterns.
  std::size_t color_count() const;
  int max_color() const;

  friend bool operator==(const ColoringSchema&, const ColoringSchema&) = default;

 private:
  DistanceGraphSpec spec_;
  std::vector<NamedPattern> patterns_;
  std::vector<std::size_t> column_index_;
  std::vector<std::int64_t> shifts_;
};

/// Row of the reference point in column x: -(p_0 + ... + p_{x-1}).
std::int64_t reference_row(const ColoringSchema& schema, std::int64_t x);

/// Color of point p = (i,j), 0 <= i <= t.
int color_at(const ColoringSchema& schema, GridPoint p);

/// Color of integer n via its canonical grid point. Requires connectivity.
int color_of_int(const ColoringSchema& schema, std::int64_t n);

struct CongruenceCheck {
  bool ok = false;
  bool same_pattern = true;  // B_0 and B_t share a pattern; true by construction
  std::int64_t shift_sum = 0;
  std::int64_t modulus = 0;  // length of B_0's pattern
  std::int64_t sum_residue = 0;
  std::int64_t k_residue = 0;
};

/// sum(p_i) == k (mod |pattern of B_0|), the gluing condition for B_0 and B_t.
CongruenceCheck congruence_check(const ColoringSchema& schema);

/// One column of a rendered strip.
struct ColumnView {
  const Pattern* pattern = nullptr;
  std::int64_t reference_row = 0;
};

/// Renders rows j = 0, -1, ..., -(rows-1) top to bottom, single spaces between
/// cells, one line per row. With highlight_refs each column's reference cell
/// is prefixed by '*'.
std::string render_columns(std::span<const ColumnView> columns, std::int64_t rows,
                           bool highlight_refs);

/// The t+1 columns B_0..B_t of the schema.
std::string render_matrix(const ColoringSchema& schema, std::int64_t rows,
                          bool highlight_refs);

/// One (pattern, shift) step of a parametric schema.
struct FamilyStep {
  std::string pattern;
  std::int64_t shift = 0;

  friend bool operator==(const FamilyStep&, const FamilyStep&) = default;
};

/// A parametric schema: a fixed head of columns followed by one (pattern,
/// shift) step repeated up to column t-1. Instances exist for t >= min_t with
/// t == t_residue and k == k_residue (mod modulus).
struct SchemaFamily {
  std::string name;
  std::vector<NamedPattern> patterns;
  std::vector<FamilyStep> head;
  FamilyStep tail;
  std::int64_t modulus = 1;
  std::int64_t t_residue = 0;
  std::int64_t k_residue = 0;
  std::int64_t min_t = 4;
};

/// Throws Error(kTooSmall) below min_t and Error(kWrongFamily) on a residue
/// mismatch; the resulting spec must be connected.
ColoringSchema instantiate_family(const SchemaFamily& family, std::int64_t t,
                                  std::int64_t k);

/// Column layout of an instance without residue checks (used for structural
/// analysis over all admissible t).
std::vector<FamilyStep> family_columns(const SchemaFamily& family,
                                       std::int64_t t);

}  // namespace spackd

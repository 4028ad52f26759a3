#include "spackd/schema.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "spackd/error.hpp"

namespace spackd {
namespace {

[[noreturn]] void invalid(const std::string& why) {
  throw Error(ErrorKind::kInvalidSchema, "invalid schema: " + why);
}

}  // namespace

ColoringSchema::ColoringSchema(DistanceGraphSpec spec,
                               std::vector<NamedPattern> patterns,
                               const std::vector<std::string>& columns,
                               std::vector<std::int64_t> shifts)
    : spec_(spec), patterns_(std::move(patterns)), shifts_(std::move(shifts)) {
  const auto t = static_cast<std::size_t>(spec_.t());
  if (patterns_.empty()) invalid("no patterns");
  std::set<std::string> names;
  for (const auto& [name, pattern] : patterns_) {
    if (!names.insert(name).second) invalid("duplicate pattern name '" + name + "'");
    if (pattern.colors.empty()) invalid("pattern '" + name + "' is empty");
    for (int c : pattern.colors) {
      if (c < 1) invalid("pattern '" + name + "' has color < 1");
    }
  }
  if (columns.size() != t) {
    invalid("expected " + std::to_string(t) + " columns, got " +
            std::to_string(columns.size()));
  }
  if (shifts_.size() != t) {
    invalid("expected " + std::to_string(t) + " shifts, got " +
            std::to_string(shifts_.size()));
  }
  column_index_.reserve(t);
  for (const auto& name : columns) {
    const auto it = std::find_if(patterns_.begin(), patterns_.end(),
                                 [&](const NamedPattern& p) { return p.name == name; });
    if (it == patterns_.end()) invalid("unknown pattern name '" + name + "'");
    column_index_.push_back(static_cast<std::size_t>(it - patterns_.begin()));
  }
  const auto d_max = static_cast<std::int64_t>(max_pattern_length());
  for (std::int64_t p : shifts_) {
    if (p < 0 || p >= d_max) {
      invalid("shift " + std::to_string(p) + " outside [0, " +
              std::to_string(d_max) + ")");
    }
  }
}

const Pattern& ColoringSchema::column_pattern(std::int64_t x) const {
  if (x < 0 || x > spec_.t()) {
    throw Error(ErrorKind::kInvalidPoint, "column " + std::to_string(x) + " out of range");
  }
  const auto col = static_cast<std::size_t>(x == spec_.t() ? 0 : x);
  return patterns_[column_index_[col]].pattern;
}

const std::string& ColoringSchema::column_name(std::int64_t x) const {
  if (x < 0 || x > spec_.t()) {
    throw Error(ErrorKind::kInvalidPoint, "column " + std::to_string(x) + " out of range");
  }
  const auto col = static_cast<std::size_t>(x == spec_.t() ? 0 : x);
  return patterns_[column_index_[col]].name;
}

std::vector<std::string> ColoringSchema::column_names() const {
  std::vector<std::string> out;
  out.reserve(column_index_.size());
  for (std::size_t idx : column_index_) out.push_back(patterns_[idx].name);
  return out;
}

std::size_t ColoringSchema::max_pattern_length() const noexcept {
  std::size_t d = 0;
  for (const auto& p : patterns_) d = std::max(d, p.pattern.size());
  return d;
}

std::size_t ColoringSchema::color_count() const {
  std::set<int> colors;
  for (std::size_t idx : column_index_) {
    const auto& c = patterns_[idx].pattern.colors;
    colors.insert(c.begin(), c.end());
  }
  return colors.size();
}

int ColoringSchema::max_color() const {
  int m = 0;
  for (std::size_t idx : column_index_) {
    const auto& c = patterns_[idx].pattern.colors;
    m = std::max(m, *std::max_element(c.begin(), c.end()));
  }
  return m;
}

std::int64_t reference_row(const ColoringSchema& schema, std::int64_t x) {
  if (x < 0 || x > schema.spec().t()) {
    throw Error(ErrorKind::kInvalidPoint, "column " + std::to_string(x) + " out of range");
  }
  std::int64_t row = 0;
  for (std::int64_t i = 0; i < x; ++i) {
    row = checked_add(row, -schema.shifts()[static_cast<std::size_t>(i)]);
  }
  return row;
}

namespace {

int pattern_color(const Pattern& pattern, std::int64_t ref_row, std::int64_t row) {
  const auto d = static_cast<std::int64_t>(pattern.size());
  return pattern.colors[static_cast<std::size_t>(floor_mod(ref_row - row, d))];
}

}  // namespace

int color_at(const ColoringSchema& schema, GridPoint p) {
  return pattern_color(schema.column_pattern(p.i), reference_row(schema, p.i), p.j);
}

int color_of_int(const ColoringSchema& schema, std::int64_t n) {
  return color_at(schema, int_to_point(n, schema.spec()));
}

CongruenceCheck congruence_check(const ColoringSchema& schema) {
  CongruenceCheck out;
  for (std::int64_t p : schema.shifts()) out.shift_sum = checked_add(out.shift_sum, p);
  out.modulus = static_cast<std::int64_t>(schema.column_pattern(0).size());
  out.sum_residue = floor_mod(out.shift_sum, out.modulus);
  out.k_residue = floor_mod(schema.spec().k(), out.modulus);
  out.same_pattern = schema.column_name(schema.spec().t()) == schema.column_name(0);
  out.ok = out.same_pattern && out.sum_residue == out.k_residue;
  return out;
}

std::string render_columns(std::span<const ColumnView> columns, std::int64_t rows,
                           bool highlight_refs) {
  if (rows < 1) throw Error(ErrorKind::kIndex, "rows must be >= 1");
  std::ostringstream out;
  for (std::int64_t r = 0; r < rows; ++r) {
    const std::int64_t row = -r;
    for (std::size_t x = 0; x < columns.size(); ++x) {
      if (x > 0) out << ' ';
      const ColumnView& col = columns[x];
      if (highlight_refs && row == col.reference_row) out << '*';
      out << pattern_color(*col.pattern, col.reference_row, row);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_matrix(const ColoringSchema& schema, std::int64_t rows,
                          bool highlight_refs) {
  std::vector<ColumnView> columns;
  std::int64_t ref = 0;
  for (std::int64_t x = 0; x <= schema.spec().t(); ++x) {
    columns.push_back({&schema.column_pattern(x), ref});
    if (x < schema.spec().t()) ref -= schema.shifts()[static_cast<std::size_t>(x)];
  }
  return render_columns(columns, rows, highlight_refs);
}

std::vector<FamilyStep> family_columns(const SchemaFamily& family, std::int64_t t) {
  const auto head = static_cast<std::int64_t>(family.head.size());
  if (t < family.min_t || t <= head) {
    throw Error(ErrorKind::kTooSmall,
                "family " + family.name + " needs t >= " +
                    std::to_string(std::max<std::int64_t>(family.min_t, head + 1)) +
                    ", got t=" + std::to_string(t));
  }
  std::vector<FamilyStep> steps = family.head;
  steps.insert(steps.end(), static_cast<std::size_t>(t - head), family.tail);
  return steps;
}

ColoringSchema instantiate_family(const SchemaFamily& family, std::int64_t t,
                                  std::int64_t k) {
  std::vector<FamilyStep> steps = family_columns(family, t);
  if (floor_mod(t, family.modulus) != family.t_residue ||
      floor_mod(k, family.modulus) != family.k_residue) {
    throw Error(ErrorKind::kWrongFamily,
                "family " + family.name + " covers t = " +
                    std::to_string(family.t_residue) + ", k = " +
                    std::to_string(family.k_residue) + " (mod " +
                    std::to_string(family.modulus) + "), got k=" +
                    std::to_string(k) + " t=" + std::to_string(t));
  }
  DistanceGraphSpec spec(k, t);
  spec.require_connected();
  std::vector<std::string> columns;
  std::vector<std::int64_t> shifts;
  for (const auto& step : steps) {
    columns.push_back(step.pattern);
    shifts.push_back(step.shift);
  }
  return ColoringSchema(spec, family.patterns, columns, std::move(shifts));
}

}  // namespace spackd

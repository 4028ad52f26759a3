#include "spackd/catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "spackd/error.hpp"

namespace spackd {
namespace {

const Pattern kPatternA{{1, 2, 3, 1, 4, 5}};
const Pattern kPatternB{{4, 1, 5, 2, 1, 3}};
const Pattern kPatternC{{1, 2, 1, 3, 1, 4, 1, 5}};
const Pattern kPatternD{{4, 3, 5, 4, 2, 5, 3, 2}};
const Pattern kPatternFive{{1, 2, 3, 4, 5}};
const Pattern kPatternSixteen{{1, 2, 1, 3, 1, 2, 1, 3, 1, 4, 1, 5, 1, 4, 1, 5}};
const Pattern kPatternSix{{1, 2, 3, 4, 5, 6}};
const Pattern kPatternTwelve{{1, 2, 3, 4, 5, 1, 6, 3, 2, 5, 4, 6}};
const Pattern kDiagonalTwo{{1, 3, 5, 2, 4}};
const Pattern kDiagonalThree{{1, 3, 5, 4, 2}};

ColoringSchema uniform(const DistanceGraphSpec& spec, const Pattern& pattern,
                       std::int64_t shift) {
  const auto t = static_cast<std::size_t>(spec.t());
  return ColoringSchema(spec, {{"P", pattern}}, std::vector<std::string>(t, "P"),
                        std::vector<std::int64_t>(t, shift));
}

// Head steps, then the tail step repeated up to column t-1.
ColoringSchema layered(const DistanceGraphSpec& spec, std::vector<NamedPattern> patterns,
                       const std::vector<FamilyStep>& head, const FamilyStep& tail) {
  std::vector<std::string> columns;
  std::vector<std::int64_t> shifts;
  for (const auto& step : head) {
    columns.push_back(step.pattern);
    shifts.push_back(step.shift);
  }
  while (static_cast<std::int64_t>(columns.size()) < spec.t()) {
    columns.push_back(tail.pattern);
    shifts.push_back(tail.shift);
  }
  return ColoringSchema(spec, std::move(patterns), columns, std::move(shifts));
}

ColoringSchema parity_coloring(const DistanceGraphSpec& spec) {
  return uniform(spec, Pattern{{1, 2}}, 1);
}

// Position (i - j) mod (k+t) walks the cycle Z_{k+t} generated by k, and every
// edge of G(k,t) moves one step along it. Colors 1,2,1,2,...,1,2,3 properly
// color that odd cycle.
ColoringSchema odd_cycle_coloring(const DistanceGraphSpec& spec) {
  const std::int64_t len = spec.k() + spec.t();
  Pattern cycle;
  for (std::int64_t p = 0; p < len; ++p) {
    cycle.colors.push_back(p == len - 1 ? 3 : (p % 2 == 0 ? 1 : 2));
  }
  return uniform(spec, cycle, len - 1);
}

ColoringSchema one_one_two_coloring(const DistanceGraphSpec& spec) {
  return layered(spec, {{"X", Pattern{{1, 2}}}, {"Y", Pattern{{3, 4, 2, 1}}}},
                 {{"X", 0}, {"Y", 2}, {"Y", 0}}, {"X", 1});
}

ColoringSchema c_family(const DistanceGraphSpec& spec, int n) {
  return instantiate_family(
      families::one_two(n, spec.t() % 6, spec.k() % 6), spec.t(), spec.k());
}

ColoringSchema cd_coloring(const DistanceGraphSpec& spec, int pairs) {
  std::vector<FamilyStep> head;
  for (int i = 0; i < pairs; ++i) {
    head.push_back({"C", 0});
    head.push_back({"D", 1});
  }
  return layered(spec, {{"C", kPatternC}, {"D", kPatternD}}, head, {"C", 3});
}

ColoringSchema one_two_coloring(const DistanceGraphSpec& spec) {
  const std::int64_t k = spec.k();
  const std::int64_t t = spec.t();
  if (t >= 12) return c_family(spec, families::select_index(k, t));
  switch (t) {
    case 11:
      if (k == 3 || k == 8) return uniform(spec, kPatternFive, 3);
      return c_family(spec, k == 4 ? 0 : k == 5 ? 1 : k == 6 ? 2 : k == 7 ? 3 : k == 9 ? 5 : 0);
    case 10:
      if (k == 7) return cd_coloring(spec, 3);
      return c_family(spec, 1);
    case 9:
      if (k == 4) return cd_coloring(spec, 3);
      if (k == 5) return uniform(spec, kPatternC, 5);
      return c_family(spec, k == 7 ? 1 : 2);
    case 8:
      if (k == 3) return cd_coloring(spec, 1);
      return c_family(spec, k == 5 ? 1 : 3);
    case 7:
      if (k == 6) return uniform(spec, kPatternFive, 3);
      return c_family(spec, static_cast<int>(k) - 2);
    case 6:
      return cd_coloring(spec, 1);
    case 5:
      if (k == 3) return uniform(spec, kPatternSixteen, 7);
      return c_family(spec, 0);
    default:
      return c_family(spec, 1);
  }
}

bool five_colorable_two_distance(std::int64_t k, std::int64_t t) {
  const std::int64_t tm = floor_mod(t, 5);
  const std::int64_t km = floor_mod(k, 5);
  const bool t14 = tm == 1 || tm == 4;
  const bool t23 = tm == 2 || tm == 3;
  const bool k14 = km == 1 || km == 4;
  const bool k23 = km == 2 || km == 3;
  return (t14 && k23) || (t23 && k14);
}

ColoringSchema two_distance_coloring(const DistanceGraphSpec& spec) {
  const std::int64_t k = spec.k();
  const std::int64_t t = spec.t();
  if (five_colorable_two_distance(k, t)) {
    // The two diagonal colorings of Z^2 glue iff 2t == k or 3t == k (mod 5);
    // both at once would force 5 | k and 5 | t.
    const bool by_two = floor_mod(2 * t - k, 5) == 0;
    const bool by_three = floor_mod(3 * t - k, 5) == 0;
    if (by_two == by_three) {
      throw std::logic_error("diagonal 5-colorings: expected exactly one congruence to hold");
    }
    return by_two ? uniform(spec, kDiagonalTwo, 2) : uniform(spec, kDiagonalThree, 3);
  }
  if (t == 5 && k == 3) return uniform(spec, kPatternTwelve, 3);
  if (t == 5 && k == 4) {
    return instantiate_family(families::two_distance(0, 5, 4), t, k);
  }
  const int n = families::select_index(k, t);
  return instantiate_family(families::two_distance(n, t % 6, k % 6), t, k);
}

}  // namespace

namespace families {

int select_index(std::int64_t k, std::int64_t t) {
  return static_cast<int>(floor_mod(floor_mod(k, 6) - 2 * floor_mod(t, 6), 6));
}

SchemaFamily one_two(int n, std::int64_t t_residue, std::int64_t k_residue) {
  if (n < 0 || n > 5) throw Error(ErrorKind::kWrongFamily, "c_n needs 0 <= n <= 5");
  SchemaFamily f;
  f.name = "c" + std::to_string(n);
  f.patterns = {{"A", kPatternA}, {"B", kPatternB}};
  for (int i = 0; i < n; ++i) {
    f.head.push_back({"A", 0});
    f.head.push_back({"B", 5});
  }
  f.tail = {"A", 2};
  f.modulus = 6;
  f.t_residue = floor_mod(t_residue, 6);
  f.k_residue = floor_mod(k_residue, 6);
  f.min_t = std::max<std::int64_t>(4, 2 * n + 1);
  return f;
}

SchemaFamily two_distance(int n, std::int64_t t_residue, std::int64_t k_residue) {
  static const std::vector<std::int64_t> kHeads[] = {
      {}, {3}, {3, 2, 3}, {3, 2, 3, 2, 3}, {3, 4, 3}, {3, 4, 3, 2, 3}};
  if (n < 0 || n > 5) throw Error(ErrorKind::kWrongFamily, "q_n needs 0 <= n <= 5");
  SchemaFamily f;
  f.name = "q" + std::to_string(n);
  f.patterns = {{"P", kPatternSix}};
  for (std::int64_t s : kHeads[n]) f.head.push_back({"P", s});
  f.tail = {"P", 2};
  f.modulus = 6;
  f.t_residue = floor_mod(t_residue, 6);
  f.k_residue = floor_mod(k_residue, 6);
  f.min_t = std::max<std::int64_t>(4, static_cast<std::int64_t>(f.head.size()) + 1);
  return f;
}

}  // namespace families

ChiResult chi(const PackingSequence& seq, std::int64_t k, std::int64_t t) {
  const SequenceClass cls = classify(seq);
  if (cls.family == SequenceFamily::kOther) {
    throw Error(ErrorKind::kUnsupportedSequence,
                "no closed form for sequence " + seq.to_string());
  }
  const DistanceGraphSpec spec(k, t);
  spec.require_connected();
  const bool even = (k + t) % 2 == 0;
  const bool constructive = k >= 3;
  const bool k2t3 = k == 2 && t == 3;

  switch (cls.family) {
    case SequenceFamily::kAllOnes:
      return {even ? 2 : 3, even ? "(1^inf): k+t even" : "(1^inf): k+t odd", constructive};
    case SequenceFamily::kOnesThenTwos:
      if (cls.ones >= 3) {
        return {even ? 2 : 3,
                even ? "three 1s, as (1^inf): k+t even" : "three 1s, as (1^inf): k+t odd",
                constructive};
      }
      if (cls.ones == 2) {
        return {even ? 2 : 4, even ? "(1,1,2^inf): k+t even" : "(1,1,2^inf): k+t odd",
                constructive};
      }
      return {k2t3 ? 6 : 5, k2t3 ? "(1,2^inf): k=2, t=3" : "(1,2^inf): k != 2 or t != 3",
              constructive};
    case SequenceFamily::kAllTwos:
      if (k2t3) return {7, "(2^inf): k=2, t=3", constructive};
      if (five_colorable_two_distance(k, t)) return {5, "(2^inf): mod-5 diagonal", constructive};
      return {6, "(2^inf): otherwise", constructive};
    case SequenceFamily::kOther:
      break;
  }
  throw Error(ErrorKind::kUnsupportedSequence, "unsupported sequence");
}

ChiResult chi_reduced(const PackingSequence& seq, std::int64_t k, std::int64_t t) {
  const ReducedSpec reduced = reduce_spec(k, t);
  return chi(seq, reduced.spec.k(), reduced.spec.t());
}

ColoringSchema catalog_coloring(const PackingSequence& seq, std::int64_t k,
                                std::int64_t t) {
  const ChiResult target = chi(seq, k, t);
  if (k < 3) {
    throw Error(ErrorKind::kConstructiveOutOfScope,
                "constructive colorings cover 3 <= k < t; chi(G(" + std::to_string(k) + "," +
                    std::to_string(t) + ")) = " + std::to_string(target.value) +
                    " is served from the closed form only");
  }
  const DistanceGraphSpec spec(k, t);
  if (target.value == 2) return parity_coloring(spec);

  const SequenceClass cls = classify(seq);
  switch (cls.family) {
    case SequenceFamily::kAllOnes:
      return odd_cycle_coloring(spec);
    case SequenceFamily::kOnesThenTwos:
      if (cls.ones >= 3) return odd_cycle_coloring(spec);
      if (cls.ones == 2) return one_one_two_coloring(spec);
      return one_two_coloring(spec);
    case SequenceFamily::kAllTwos:
      return two_distance_coloring(spec);
    case SequenceFamily::kOther:
      break;
  }
  throw Error(ErrorKind::kUnsupportedSequence, "unsupported sequence");
}

ExplicitColoring coloring_for_range(const PackingSequence& seq, std::int64_t k,
                                    std::int64_t t, std::int64_t a, std::int64_t b) {
  const ColoringSchema schema = catalog_coloring(seq, k, t);
  ExplicitColoring out;
  for (std::int64_t n = a; n <= b; ++n) out.emplace_hint(out.end(), n, color_of_int(schema, n));
  return out;
}

}  // namespace spackd

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace spackd {

/// A non-decreasing sequence S = (s_1, s_2, ...) that is eventually constant:
/// a finite prefix followed by the tail value repeated forever.
///
/// The stored prefix is normalized so it never ends with the tail value;
/// (1,2,2^inf) and (1,2^inf) compare equal.
class PackingSequence {
 public:
  /// Throws Error(kMalformedSequence) on zero/negative entries or when
  /// prefix ++ tail^inf is not non-decreasing.
  PackingSequence(std::vector<int> prefix, int tail);

  /// Parses comma-separated terms `INT`, `INT^INT` or `INT^inf`. Exactly one
  /// `^inf` term is allowed and it must be last. Surrounding parentheses and
  /// whitespace are ignored.
  static PackingSequence parse(std::string_view text);

  /// s_i for i >= 1. Throws Error(kIndex) for i == 0.
  int at(std::size_t i) const;

  const std::vector<int>& prefix() const noexcept { return prefix_; }
  int tail() const noexcept { return tail_; }
  int max_element() const noexcept { return tail_; }

  /// Canonical text form, runs collapsed: "1^2,2^inf".
  std::string to_string() const;

  friend bool operator==(const PackingSequence&,
                         const PackingSequence&) = default;

 private:
  std::vector<int> prefix_;
  int tail_;
};

enum class SequenceFamily { kAllOnes, kOnesThenTwos, kAllTwos, kOther };

struct SequenceClass {
  SequenceFamily family = SequenceFamily::kOther;
  int ones = 0;  // number of leading 1s for kOnesThenTwos
};

SequenceClass classify(const PackingSequence& seq);

}  // namespace spackd

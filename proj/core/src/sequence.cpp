#include "spackd/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "spackd/error.hpp"

namespace spackd {
namespace {

constexpr int kMaxRun = 1'000'000;

[[noreturn]] void malformed(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::kMalformedSequence,
              "malformed sequence '" + std::string(text) + "': " + why);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

PackingSequence::PackingSequence(std::vector<int> prefix, int tail)
    : prefix_(std::move(prefix)), tail_(tail) {
  if (tail_ < 1) {
    throw Error(ErrorKind::kMalformedSequence, "sequence entries must be positive");
  }
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i] < 1) {
      throw Error(ErrorKind::kMalformedSequence, "sequence entries must be positive");
    }
    const int next = i + 1 < prefix_.size() ? prefix_[i + 1] : tail_;
    if (prefix_[i] > next) {
      throw Error(ErrorKind::kMalformedSequence, "sequence must be non-decreasing");
    }
  }
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

PackingSequence PackingSequence::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = trim(body.substr(1, body.size() - 2));
  }
  if (body.empty()) malformed(text, "empty");

  std::vector<int> prefix;
  bool have_tail = false;
  int tail = 0;
  while (!body.empty()) {
    const std::size_t comma = body.find(',');
    const std::string_view term = trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{}
                                           : body.substr(comma + 1);
    if (comma != std::string_view::npos && trim(body).empty()) {
      malformed(text, "trailing comma");
    }
    if (have_tail) malformed(text, "'^inf' term must be last");

    int value = 0;
    const std::size_t caret = term.find('^');
    if (!parse_int(term.substr(0, caret), value)) {
      malformed(text, "bad term '" + std::string(term) + "'");
    }
    if (value < 1) malformed(text, "entries must be positive");
    if (caret == std::string_view::npos) {
      prefix.push_back(value);
      continue;
    }
    const std::string_view power = trim(term.substr(caret + 1));
    if (power == "inf") {
      have_tail = true;
      tail = value;
      continue;
    }
    int count = 0;
    if (!parse_int(power, count) || count < 1 || count > kMaxRun) {
      malformed(text, "bad repeat count in '" + std::string(term) + "'");
    }
    prefix.insert(prefix.end(), static_cast<std::size_t>(count), value);
  }
  if (!have_tail) malformed(text, "missing '^inf' tail");
  try {
    return PackingSequence(std::move(prefix), tail);
  } catch (const Error& e) {
    malformed(text, e.what());
  }
}

int PackingSequence::at(std::size_t i) const {
  if (i == 0) throw Error(ErrorKind::kIndex, "sequence indices start at 1");
  return i <= prefix_.size() ? prefix_[i - 1] : tail_;
}

std::string PackingSequence::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < prefix_.size();) {
    std::size_t j = i;
    while (j < prefix_.size() && prefix_[j] == prefix_[i]) ++j;
    out << prefix_[i];
    if (j - i > 1) out << '^' << (j - i);
    out << ',';
    i = j;
  }
  out << tail_ << "^inf";
  return out.str();
}

SequenceClass classify(const PackingSequence& seq) {
  const auto& prefix = seq.prefix();
  if (seq.tail() == 1) return {SequenceFamily::kAllOnes, 0};
  if (seq.tail() == 2) {
    if (prefix.empty()) return {SequenceFamily::kAllTwos, 0};
    // Normalization strips trailing 2s, so a tail-2 prefix is all ones.
    if (std::all_of(prefix.begin(), prefix.end(), [](int v) { return v == 1; })) {
      return {SequenceFamily::kOnesThenTwos, static_cast<int>(prefix.size())};
    }
  }
  return {SequenceFamily::kOther, 0};
}

}  // namespace spackd

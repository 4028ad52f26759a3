#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spackd {

enum class ErrorKind {
  kInvalidSpec,
  kInvalidArgument,
  kNotConnected,
  kInvalidPoint,
  kOverflow,
  kMalformedSequence,
  kIndex,
  kInvalidSchema,
  kWrongFamily,
  kTooSmall,
  kUnsupportedSequence,
  kUnsupportedFamily,
  kInvalidColor,
  kConstructiveOutOfScope,
  kSizeLimit,
  kParse,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// front ends can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spackd

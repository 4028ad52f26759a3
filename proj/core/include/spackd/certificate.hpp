#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "spackd/catalog.hpp"
#include "spackd/schema.hpp"
#include "spackd/search.hpp"
#include "spackd/sequence.hpp"
#include "spackd/verifier.hpp"

namespace spackd {

/// A schema together with the sequence it claims to be a packing coloring for.
struct Certificate {
  ColoringSchema schema;
  PackingSequence sequence;
};

/// {"k", "t", "sequence", "patterns": {name: [colors]}, "columns", "shifts"}.
/// Pattern order is preserved in both directions.
std::string certificate_to_json(const ColoringSchema& schema, const PackingSequence& seq,
                                int indent = 2);

/// Malformed JSON or missing/mistyped fields raise Error(kParse); structural
/// problems (unknown pattern names, length mismatches, shifts >= d_max) raise
/// Error(kInvalidSchema).
Certificate parse_certificate(std::string_view json);

/// {"verdict":"valid"} or {"verdict":"invalid","kind",...}.
std::string report_to_json(const VerificationReport& report);

/// {"status","window","nodes"} plus "witness":[{"n","color"},...] when sat.
std::string outcome_to_json(const SearchOutcome& outcome);

std::string chi_to_json(const ChiResult& result, const PackingSequence& seq, std::int64_t k,
                        std::int64_t t);

/// Lines of the form `n,color`; blank lines and lines starting with '#' are
/// skipped. Raises Error(kParse) on anything else or on a repeated n.
ExplicitColoring parse_explicit_csv(std::string_view text);

}  // namespace spackd

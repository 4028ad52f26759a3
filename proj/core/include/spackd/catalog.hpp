#pragma once

#include <cstdint>
#include <string>

#include "spackd/schema.hpp"
#include "spackd/sequence.hpp"
#include "spackd/verifier.hpp"

namespace spackd {

struct ChiResult {
  int value = 0;
  std::string source;         // which branch of the closed form fired
  bool constructive = false;  // catalog_coloring can certify it (k >= 3)
};

/// Closed-form S-packing chromatic number of a connected G(k,t) for sequences
/// over {1,2}. Throws Error(kUnsupportedSequence) for other sequences and
/// Error(kNotConnected) when gcd(k,t) != 1.
ChiResult chi(const PackingSequence& seq, std::int64_t k, std::int64_t t);

/// chi after dividing out gcd(k,t).
ChiResult chi_reduced(const PackingSequence& seq, std::int64_t k, std::int64_t t);

/// A certified schema with exactly chi(seq,k,t) colors, for coprime
/// 3 <= k < t. Throws Error(kConstructiveOutOfScope) for k < 3.
ColoringSchema catalog_coloring(const PackingSequence& seq, std::int64_t k,
                                std::int64_t t);

/// Restriction of catalog_coloring to the integers in [a, b] (empty if a > b).
ExplicitColoring coloring_for_range(const PackingSequence& seq, std::int64_t k,
                                    std::int64_t t, std::int64_t a, std::int64_t b);

// Named constructions, exposed for fixtures and family-level verification.
namespace families {

/// (1,2^inf) colorings c_0..c_5 on patterns A = [1,2,3,1,4,5] and
/// B = [4,1,5,2,1,3]: head (A,0),(B,5) repeated n times, then (A,2).
SchemaFamily one_two(int n, std::int64_t t_residue, std::int64_t k_residue);

/// (2^inf) 6-colorings q_0..q_5 on the single pattern [1,2,3,4,5,6].
SchemaFamily two_distance(int n, std::int64_t t_residue, std::int64_t k_residue);

/// Index n = (k - 2t) mod 6 selecting c_n / q_n.
int select_index(std::int64_t k, std::int64_t t);

}  // namespace families

}  // namespace spackd

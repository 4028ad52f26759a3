#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "spackd/distance_graph.hpp"
#include "spackd/sequence.hpp"
#include "spackd/verifier.hpp"

namespace spackd {

enum class SearchStatus { kSat, kUnsat, kTimeout };

std::string_view to_string(SearchStatus status);

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;

struct SearchOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  // Worker threads. Results (status, witness, node count) do not depend on it.
  unsigned threads = 1;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::kUnsat;
  std::vector<int> witness;  // colors of 0..window-1 when sat
  // Nodes (color assignments) visited. budget + 1 on timeout.
  std::uint64_t nodes = 0;
  std::int64_t window = 0;

  ExplicitColoring witness_coloring() const;
};

/// Exhaustive backtracking over the integers 0..window-1 in increasing order,
/// colors 1..colors in increasing order. A color i is refused at n when an
/// earlier m with color i has exact_distance(m, n) <= s_i in the full graph
/// G(k,t), so an unsat window proves chi_S(G(k,t)) > colors.
///
/// Colors with equal s_i are interchangeable, so within each run of equal
/// s_i color i+1 is used only after color i; for a constant sequence vertex 0
/// gets color 1. Forward checking refutes a branch as soon as some later
/// vertex has no color left. Every sat witness is re-checked with
/// verify_explicit.
SearchOutcome search_window(const PackingSequence& seq, const DistanceGraphSpec& spec,
                            int colors, std::int64_t window,
                            const SearchOptions& options = {});

struct CertifyOptions {
  SearchOptions search;
  // Largest window tried; 0 means 16 * (k + t).
  std::int64_t max_window = 0;
};

struct LowerBoundCertificate {
  bool certified = false;
  std::int64_t window = 0;  // the unsat window when certified
  std::uint64_t nodes = 0;  // summed over all attempts
  std::vector<SearchOutcome> attempts;
};

/// Searches for a (target-1)-coloring on windows 2(k+t), 4(k+t), 8(k+t), ...
/// up to max_window. Certified means some window is unsat, hence
/// chi_S(G(k,t)) >= target. A timeout or exhausting the schedule is
/// inconclusive.
LowerBoundCertificate certify_lower_bound(const PackingSequence& seq,
                                          const DistanceGraphSpec& spec, int target,
                                          const CertifyOptions& options = {});

/// A coloring of the width x height torus grid; cell (i,j) is column i, row j.
struct TorusColoring {
  int width = 0;
  int height = 0;
  std::vector<int> cells;  // row-major: cells[j * width + i]

  int at(int i, int j) const;
};

inline constexpr std::int64_t kDefaultTorusCap = 20'000;
inline constexpr std::size_t kDefaultTorusSolutionCap = 2'000'000;

/// Every S-packing coloring of the torus C_width x C_height with colors
/// 1..colors (no symmetry reduction), in row-major lexicographic order.
/// Refuses width*height*colors above `cap` or more than `max_solutions`
/// results with Error(kSizeLimit).
std::vector<TorusColoring> enumerate_torus(const PackingSequence& seq, int colors,
                                           int width, int height,
                                           std::int64_t cap = kDefaultTorusCap,
                                           std::size_t max_solutions = kDefaultTorusSolutionCap);

/// True iff c(i,j) == c(i+1, j-shift) for every cell, indices taken modulo the
/// torus dimensions.
bool has_diagonal_shift(const TorusColoring& coloring, int shift);

}  // namespace spackd

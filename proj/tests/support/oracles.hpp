#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

// Independent reference implementations used to cross-check the library.
namespace oracle {

/// Shortest path from a to b in G(k,t) by breadth-first search over an
/// interval of integers wide enough to contain some shortest path. Returns -1
/// when b is unreachable (gcd(k,t) does not divide b - a).
std::int64_t bfs_distance(std::int64_t a, std::int64_t b, std::int64_t k, std::int64_t t);

/// All distances from `source` to every integer in [lo, hi], by one BFS.
std::map<std::int64_t, std::int64_t> bfs_ball(std::int64_t source, std::int64_t lo,
                                              std::int64_t hi, std::int64_t k, std::int64_t t);

/// (i, j) with 0 <= i < t and n = j*t + i*k, by trying every i.
std::pair<std::int64_t, std::int64_t> point_by_search(std::int64_t n, std::int64_t k,
                                                      std::int64_t t);

/// First pair (a, b), a < b, with equal colors c and BFS distance <= s_c,
/// where s is given as a function of the color.
template <typename SAt>
std::optional<std::pair<std::int64_t, std::int64_t>> find_close_pair(
    const std::map<std::int64_t, int>& coloring, std::int64_t k, std::int64_t t, SAt s_at) {
  if (coloring.empty()) return std::nullopt;
  const std::int64_t lo = coloring.begin()->first;
  const std::int64_t hi = coloring.rbegin()->first;
  for (const auto& [a, ca] : coloring) {
    const auto ball = bfs_ball(a, lo, hi, k, t);
    for (auto it = coloring.upper_bound(a); it != coloring.end(); ++it) {
      if (it->second != ca) continue;
      const auto d = ball.find(it->first);
      if (d != ball.end() && d->second >= 0 && d->second <= s_at(ca)) {
        return std::make_pair(a, it->first);
      }
    }
  }
  return std::nullopt;
}

}  // namespace oracle

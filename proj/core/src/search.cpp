#include "spackd/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "spackd/error.hpp"

namespace spackd {

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kSat: return "sat";
    case SearchStatus::kUnsat: return "unsat";
    case SearchStatus::kTimeout: return "timeout";
  }
  return "unknown";
}

ExplicitColoring SearchOutcome::witness_coloring() const {
  ExplicitColoring out;
  for (std::size_t n = 0; n < witness.size(); ++n) {
    out.emplace_hint(out.end(), static_cast<std::int64_t>(n), witness[n]);
  }
  return out;
}

namespace {

constexpr int kMaxColors = 63;

struct Link {
  std::int32_t other;
  std::int32_t distance;
};

// Static constraint structure shared (read-only) by all workers.
struct WindowProblem {
  int colors = 0;
  std::int32_t size = 0;
  std::vector<int> radius;  // radius[c] = s_c, index 0 unused
  // Colors with equal s_c form a group; within a group they are
  // interchangeable. group[c] numbers the group, rank[c] is c's position in it.
  std::vector<int> group;
  std::vector<int> rank;
  int groups = 0;
  std::vector<std::vector<Link>> later;  // later[n]: m > n within reach of n

  WindowProblem(const PackingSequence& seq, const DistanceGraphSpec& spec, int num_colors,
                std::int64_t window)
      : colors(num_colors), size(static_cast<std::int32_t>(window)) {
    const auto slots = static_cast<std::size_t>(colors) + 1;
    radius.assign(slots, 0);
    group.assign(slots, 0);
    rank.assign(slots, 0);
    int reach = 0;
    for (int c = 1; c <= colors; ++c) {
      const auto cu = static_cast<std::size_t>(c);
      radius[cu] = seq.at(cu);
      reach = std::max(reach, radius[cu]);
      if (c > 1 && radius[cu] == radius[cu - 1]) {
        group[cu] = group[cu - 1];
        rank[cu] = rank[cu - 1] + 1;
      } else {
        group[cu] = groups++;
      }
    }
    std::vector<Link> deltas;
    for (std::int32_t delta = 1; delta < size; ++delta) {
      const std::int64_t d = exact_distance(0, delta, spec);
      if (d <= reach) deltas.push_back({delta, static_cast<std::int32_t>(d)});
    }
    later.resize(static_cast<std::size_t>(size));
    for (std::int32_t n = 0; n < size; ++n) {
      for (const Link& l : deltas) {
        if (n + l.other >= size) break;
        later[static_cast<std::size_t>(n)].push_back({n + l.other, l.distance});
      }
    }
  }
};

struct PrefixLeaf {
  std::vector<int> colors;
  std::uint64_t nodes_before = 0;  // prefix nodes counted when this leaf is reached
};

// Backtracking with forward checking: every vertex keeps the set of colors
// not yet excluded by an assigned vertex, and an emptied set refutes the
// branch at once. Exclusion counts make undo exact.
class Searcher {
 public:
  Searcher(const WindowProblem& problem, std::uint64_t budget)
      : problem_(problem), budget_(budget), stride_(static_cast<std::size_t>(problem.colors) + 1),
        color_(static_cast<std::size_t>(problem.size), 0),
        domain_(static_cast<std::size_t>(problem.size), full_domain(problem.colors)),
        excluded_(static_cast<std::size_t>(problem.size) * stride_, 0),
        used_(static_cast<std::size_t>(problem.groups), 0) {}

  // Full search from vertex `start` after replaying colors[0..start).
  SearchStatus run(std::int32_t start, const std::vector<int>& fixed) {
    for (std::int32_t n = 0; n < start; ++n) {
      const int c = fixed[static_cast<std::size_t>(n)];
      assign(n, c);
      note_use(c);
    }
    limit_ = problem_.size;
    if (dfs(start)) return SearchStatus::kSat;
    return timed_out_ ? SearchStatus::kTimeout : SearchStatus::kUnsat;
  }

  // Enumerates all surviving assignments of vertices [0, depth) in DFS order.
  SearchStatus enumerate_prefix(std::int32_t depth, std::vector<PrefixLeaf>& leaves) {
    limit_ = depth;
    leaves_ = &leaves;
    dfs(0);
    leaves_ = nullptr;
    return timed_out_ ? SearchStatus::kTimeout : SearchStatus::kUnsat;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<int>& colors() const noexcept { return color_; }

 private:
  static std::uint64_t full_domain(int colors) {
    return ((std::uint64_t{1} << colors) - 1) << 1;
  }

  // Colors allowed by symmetry: within each group, the first unused one and
  // every used one.
  std::uint64_t symmetry_mask() const {
    std::uint64_t mask = 0;
    for (int c = 1; c <= problem_.colors; ++c) {
      const auto cu = static_cast<std::size_t>(c);
      if (problem_.rank[cu] <= used_[static_cast<std::size_t>(problem_.group[cu])]) {
        mask |= std::uint64_t{1} << c;
      }
    }
    return mask;
  }

  // Returns false if some later vertex is left without colors.
  bool assign(std::int32_t n, int c) {
    color_[static_cast<std::size_t>(n)] = c;
    const int r = problem_.radius[static_cast<std::size_t>(c)];
    const std::uint64_t bit = std::uint64_t{1} << c;
    bool alive = true;
    for (const Link& l : problem_.later[static_cast<std::size_t>(n)]) {
      if (l.distance > r) continue;
      const auto m = static_cast<std::size_t>(l.other);
      if (excluded_[m * stride_ + static_cast<std::size_t>(c)]++ == 0) {
        domain_[m] &= ~bit;
        alive = alive && domain_[m] != 0;
      }
    }
    return alive;
  }

  void unassign(std::int32_t n, int c) {
    const int r = problem_.radius[static_cast<std::size_t>(c)];
    const std::uint64_t bit = std::uint64_t{1} << c;
    for (const Link& l : problem_.later[static_cast<std::size_t>(n)]) {
      if (l.distance > r) continue;
      const auto m = static_cast<std::size_t>(l.other);
      if (--excluded_[m * stride_ + static_cast<std::size_t>(c)] == 0) domain_[m] |= bit;
    }
    color_[static_cast<std::size_t>(n)] = 0;
  }

  // Returns true if c is the first use within its group.
  bool note_use(int c) {
    int& used = used_[static_cast<std::size_t>(problem_.group[static_cast<std::size_t>(c)])];
    if (problem_.rank[static_cast<std::size_t>(c)] != used) return false;
    ++used;
    return true;
  }

  bool dfs(std::int32_t n) {
    if (n == limit_) {
      if (leaves_ == nullptr) return true;
      leaves_->push_back({std::vector<int>(color_.begin(), color_.begin() + n), nodes_});
      return false;
    }
    const std::uint64_t candidates = domain_[static_cast<std::size_t>(n)] & symmetry_mask();
    for (int c = 1; c <= problem_.colors; ++c) {
      if (!(candidates & (std::uint64_t{1} << c))) continue;
      if (++nodes_ > budget_) {
        timed_out_ = true;
        return false;
      }
      const bool alive = assign(n, c);
      const bool first = note_use(c);
      if (alive && dfs(n + 1)) return true;
      if (first) --used_[static_cast<std::size_t>(problem_.group[static_cast<std::size_t>(c)])];
      unassign(n, c);
      if (timed_out_) return false;
    }
    return false;
  }

  const WindowProblem& problem_;
  std::uint64_t budget_;
  std::size_t stride_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  std::int32_t limit_ = 0;
  std::vector<int> color_;
  std::vector<std::uint64_t> domain_;
  std::vector<std::uint32_t> excluded_;  // [vertex * stride + color]
  std::vector<int> used_;                // colors used so far, per group
  std::vector<PrefixLeaf>* leaves_ = nullptr;
};

SearchOutcome finish(SearchOutcome out, const PackingSequence& seq,
                     const DistanceGraphSpec& spec) {
  if (out.status == SearchStatus::kSat) {
    const VerificationReport check = verify_explicit(out.witness_coloring(), spec, seq);
    if (!check.valid()) {
      throw std::logic_error("search produced a witness that fails verification");
    }
  } else {
    out.witness.clear();
  }
  return out;
}

struct SubtreeResult {
  SearchStatus status = SearchStatus::kUnsat;
  std::uint64_t nodes = 0;
  std::vector<int> witness;
  bool ran = false;
};

// Splits on a prefix of vertices and merges subtree results in DFS order, so
// the outcome and node count equal those of the sequential search.
SearchOutcome parallel_search(const WindowProblem& problem, std::uint64_t budget,
                              unsigned threads) {
  SearchOutcome out;
  out.window = problem.size;

  std::vector<PrefixLeaf> leaves;
  std::int32_t depth = std::min<std::int32_t>(8, problem.size / 2);
  std::uint64_t prefix_nodes = 0;
  for (;;) {
    leaves.clear();
    Searcher prefix(problem, budget);
    if (prefix.enumerate_prefix(depth, leaves) == SearchStatus::kTimeout) {
      out.status = SearchStatus::kTimeout;
      out.nodes = budget + 1;
      return out;
    }
    prefix_nodes = prefix.nodes();
    if (leaves.size() >= 8 * static_cast<std::size_t>(threads) || depth >= problem.size / 2) break;
    ++depth;
  }

  std::vector<SubtreeResult> results(leaves.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_sat{std::numeric_limits<std::size_t>::max()};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= leaves.size()) return;
      if (i > first_sat.load()) continue;
      Searcher sub(problem, budget);
      SubtreeResult& r = results[i];
      r.status = sub.run(depth, leaves[i].colors);
      r.nodes = sub.nodes();
      r.ran = true;
      if (r.status == SearchStatus::kSat) {
        r.witness = sub.colors();
        std::size_t cur = first_sat.load();
        while (i < cur && !first_sat.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::uint64_t subtree_nodes = 0;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const SubtreeResult& r = results[i];
    if (!r.ran) throw std::logic_error("parallel search skipped a required subtree");
    subtree_nodes += r.nodes;
    if (r.status == SearchStatus::kTimeout || leaves[i].nodes_before + subtree_nodes > budget) {
      out.status = SearchStatus::kTimeout;
      out.nodes = budget + 1;
      return out;
    }
    if (r.status == SearchStatus::kSat) {
      out.status = SearchStatus::kSat;
      out.nodes = leaves[i].nodes_before + subtree_nodes;
      out.witness = r.witness;
      return out;
    }
  }
  out.nodes = prefix_nodes + subtree_nodes;
  if (out.nodes > budget) {
    out.status = SearchStatus::kTimeout;
    out.nodes = budget + 1;
  } else {
    out.status = SearchStatus::kUnsat;
  }
  return out;
}

}  // namespace

SearchOutcome search_window(const PackingSequence& seq, const DistanceGraphSpec& spec,
                            int colors, std::int64_t window, const SearchOptions& options) {
  spec.require_connected();
  if (colors < 1 || colors > kMaxColors) {
    throw Error(ErrorKind::kInvalidArgument,
                "color count must be in [1, " + std::to_string(kMaxColors) + "]");
  }
  if (window < 1 || window > std::numeric_limits<std::int32_t>::max()) {
    throw Error(ErrorKind::kInvalidArgument, "window must be >= 1");
  }
  const WindowProblem problem(seq, spec, colors, window);

  if (options.threads > 1 && window >= 16) {
    return finish(parallel_search(problem, options.node_budget, options.threads), seq, spec);
  }

  Searcher searcher(problem, options.node_budget);
  SearchOutcome out;
  out.window = window;
  out.status = searcher.run(0, {});
  out.nodes = out.status == SearchStatus::kTimeout ? options.node_budget + 1 : searcher.nodes();
  if (out.status == SearchStatus::kSat) out.witness = searcher.colors();
  return finish(std::move(out), seq, spec);
}

LowerBoundCertificate certify_lower_bound(const PackingSequence& seq,
                                          const DistanceGraphSpec& spec, int target,
                                          const CertifyOptions& options) {
  if (target < 2) {
    throw Error(ErrorKind::kInvalidArgument, "lower-bound target must be >= 2");
  }
  const std::int64_t base = 2 * (spec.k() + spec.t());
  const std::int64_t max_window =
      options.max_window > 0 ? options.max_window : 16 * (spec.k() + spec.t());
  LowerBoundCertificate cert;
  for (std::int64_t n = base; n <= max_window; n *= 2) {
    SearchOutcome attempt = search_window(seq, spec, target - 1, n, options.search);
    cert.nodes += attempt.nodes;
    const SearchStatus status = attempt.status;
    cert.attempts.push_back(std::move(attempt));
    if (status == SearchStatus::kUnsat) {
      cert.certified = true;
      cert.window = n;
      break;
    }
    if (status == SearchStatus::kTimeout) break;
  }
  return cert;
}

int TorusColoring::at(int i, int j) const {
  const int ii = static_cast<int>(floor_mod(i, width));
  const int jj = static_cast<int>(floor_mod(j, height));
  return cells[static_cast<std::size_t>(jj * width + ii)];
}

namespace {

int cycle_distance(int a, int b, int len) {
  const int d = std::abs(a - b);
  return std::min(d, len - d);
}

class TorusEnumerator {
 public:
  TorusEnumerator(const PackingSequence& seq, int colors, int width, int height,
                  std::size_t max_solutions)
      : colors_(colors), width_(width), height_(height), max_solutions_(max_solutions),
        cells_(static_cast<std::size_t>(width * height), 0),
        radius_(static_cast<std::size_t>(colors) + 1, 0),
        conflicts_(cells_.size()) {
    int reach = 0;
    for (int c = 1; c <= colors; ++c) {
      radius_[static_cast<std::size_t>(c)] = seq.at(static_cast<std::size_t>(c));
      reach = std::max(reach, radius_[static_cast<std::size_t>(c)]);
    }
    for (int n = 0; n < width * height; ++n) {
      for (int m = 0; m < n; ++m) {
        const int d = cycle_distance(n % width, m % width, width) +
                      cycle_distance(n / width, m / width, height);
        if (d <= reach) conflicts_[static_cast<std::size_t>(n)].push_back({m, d});
      }
    }
  }

  std::vector<TorusColoring> run() {
    dfs(0);
    return std::move(found_);
  }

 private:
  void dfs(int n) {
    if (n == width_ * height_) {
      if (found_.size() >= max_solutions_) {
        throw Error(ErrorKind::kSizeLimit,
                    "torus enumeration exceeded " + std::to_string(max_solutions_) + " colorings");
      }
      found_.push_back({width_, height_, cells_});
      return;
    }
    std::uint64_t forbidden = 0;
    for (const Link& c : conflicts_[static_cast<std::size_t>(n)]) {
      const int other = cells_[static_cast<std::size_t>(c.other)];
      if (c.distance <= radius_[static_cast<std::size_t>(other)]) {
        forbidden |= std::uint64_t{1} << other;
      }
    }
    for (int c = 1; c <= colors_; ++c) {
      if (forbidden & (std::uint64_t{1} << c)) continue;
      cells_[static_cast<std::size_t>(n)] = c;
      dfs(n + 1);
    }
    cells_[static_cast<std::size_t>(n)] = 0;
  }

  int colors_;
  int width_;
  int height_;
  std::size_t max_solutions_;
  std::vector<int> cells_;
  std::vector<int> radius_;
  std::vector<std::vector<Link>> conflicts_;
  std::vector<TorusColoring> found_;
};

}  // namespace

std::vector<TorusColoring> enumerate_torus(const PackingSequence& seq, int colors, int width,
                                           int height, std::int64_t cap,
                                           std::size_t max_solutions) {
  if (colors < 1 || colors > kMaxColors) {
    throw Error(ErrorKind::kInvalidArgument,
                "color count must be in [1, " + std::to_string(kMaxColors) + "]");
  }
  if (width < 3 || height < 3) {
    throw Error(ErrorKind::kInvalidArgument, "torus needs width, height >= 3");
  }
  const std::int64_t size = std::int64_t{width} * height * colors;
  if (size > cap) {
    throw Error(ErrorKind::kSizeLimit, "torus state space " + std::to_string(size) +
                                           " exceeds cap " + std::to_string(cap));
  }
  return TorusEnumerator(seq, colors, width, height, max_solutions).run();
}

bool has_diagonal_shift(const TorusColoring& coloring, int shift) {
  for (int j = 0; j < coloring.height; ++j) {
    for (int i = 0; i < coloring.width; ++i) {
      if (coloring.at(i, j) != coloring.at(i + 1, j - shift)) return false;
    }
  }
  return true;
}

}  // namespace spackd

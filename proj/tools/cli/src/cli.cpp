#include "spackd_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spackd/catalog.hpp"
#include "spackd/certificate.hpp"
#include "spackd/error.hpp"
#include "spackd/search.hpp"
#include "spackd/verifier.hpp"
#include "spackd_cli/fixtures.hpp"

namespace spackd::cli {
namespace {

struct GraphArgs {
  std::int64_t k = 0;
  std::int64_t t = 0;
  std::string seq;

  void add_to(CLI::App& cmd, bool required = true) {
    auto* ko = cmd.add_option("--k", k, "smaller distance k");
    auto* to = cmd.add_option("--t", t, "larger distance t");
    auto* so = cmd.add_option("--seq", seq, "packing sequence, e.g. \"1,2^inf\"");
    if (required) {
      ko->required();
      to->required();
      so->required();
    }
  }
};

// Divides out gcd(k,t) with a notice on stderr; components of G(k,t) are
// copies of the reduced graph.
ReducedSpec reduce_with_notice(std::int64_t k, std::int64_t t, std::ostream& err) {
  const ReducedSpec reduced = reduce_spec(k, t);
  if (reduced.scale > 1) {
    err << "note: gcd(" << k << "," << t << ") = " << reduced.scale
        << "; using G(" << reduced.spec.k() << "," << reduced.spec.t() << ")\n";
  }
  return reduced;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t default_budget() {
  const char* env = std::getenv("SPACKD_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultNodeBudget;
  std::uint64_t value = 0;
  const std::string_view text(env);
  const auto r = std::from_chars(text.data(), text.data() + text.size(), value);
  if (r.ec != std::errc{} || r.ptr != text.data() + text.size() || value == 0) {
    throw Error(ErrorKind::kInvalidArgument, "SPACKD_BUDGET must be a positive integer");
  }
  return value;
}

int cmd_chi(const GraphArgs& g, const std::string& format, std::ostream& out,
            std::ostream& err) {
  const PackingSequence seq = PackingSequence::parse(g.seq);
  const ReducedSpec reduced = reduce_with_notice(g.k, g.t, err);
  const ChiResult result = chi(seq, reduced.spec.k(), reduced.spec.t());
  if (format == "json") {
    out << chi_to_json(result, seq, g.k, g.t) << "\n";
  } else {
    out << result.value << "\n";
  }
  return kExitOk;
}

int cmd_color(const GraphArgs& g, std::optional<std::int64_t> rows,
              const std::vector<std::int64_t>& range, const std::string& format, bool plain,
              std::ostream& out, std::ostream& err) {
  const PackingSequence seq = PackingSequence::parse(g.seq);
  const ReducedSpec reduced = reduce_with_notice(g.k, g.t, err);
  const ColoringSchema schema = catalog_coloring(seq, reduced.spec.k(), reduced.spec.t());
  if (format == "json") {
    out << certificate_to_json(schema, seq) << "\n";
  } else if (format == "csv") {
    if (range.size() != 2) throw Error(ErrorKind::kInvalidArgument, "csv output needs --range a b");
    for (std::int64_t n = range[0]; n <= range[1]; ++n) {
      // Integer n lies in component n mod g, at position floor(n / g) of it.
      const std::int64_t m = (n - floor_mod(n, reduced.scale)) / reduced.scale;
      out << n << "," << color_of_int(schema, m) << "\n";
    }
  } else {
    const std::int64_t r = rows.value_or(2 * static_cast<std::int64_t>(schema.max_pattern_length()));
    if (r < 1) throw Error(ErrorKind::kInvalidArgument, "--rows must be >= 1");
    out << render_matrix(schema, r, !plain);
  }
  return kExitOk;
}

int cmd_verify(const std::string& cert_path, const std::string& explicit_path,
               const GraphArgs& g, std::ostream& out) {
  VerificationReport report;
  if (!explicit_path.empty()) {
    if (g.seq.empty() || g.k == 0 || g.t == 0) {
      throw Error(ErrorKind::kInvalidArgument, "--explicit needs --k, --t and --seq");
    }
    const ExplicitColoring coloring = parse_explicit_csv(read_file(explicit_path));
    report = verify_explicit(coloring, DistanceGraphSpec(g.k, g.t), PackingSequence::parse(g.seq));
  } else {
    const Certificate cert = parse_certificate(read_file(cert_path));
    report = verify_schema(cert.schema, cert.sequence);
  }
  out << report_to_json(report) << "\n";
  return report.valid() ? kExitOk : kExitNegative;
}

int cmd_search(const GraphArgs& g, int colors, std::int64_t window,
               std::optional<std::uint64_t> budget, unsigned threads, std::ostream& out,
               std::ostream& err) {
  const PackingSequence seq = PackingSequence::parse(g.seq);
  const ReducedSpec reduced = reduce_with_notice(g.k, g.t, err);
  SearchOptions options;
  options.node_budget = budget.value_or(default_budget());
  options.threads = threads;
  const SearchOutcome outcome = search_window(seq, reduced.spec, colors, window, options);
  out << outcome_to_json(outcome) << "\n";
  switch (outcome.status) {
    case SearchStatus::kSat: return kExitOk;
    case SearchStatus::kUnsat: return kExitNegative;
    case SearchStatus::kTimeout: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_enumerate(const std::string& seq_text, int colors, int width, int height,
                  std::int64_t cap, bool count_only, std::ostream& out) {
  const PackingSequence seq = PackingSequence::parse(seq_text);
  const std::vector<TorusColoring> found = enumerate_torus(seq, colors, width, height, cap);
  nlohmann::ordered_json doc;
  doc["width"] = width;
  doc["height"] = height;
  doc["colors"] = colors;
  doc["count"] = found.size();
  std::size_t shift2 = 0;
  std::size_t shift3 = 0;
  for (const auto& c : found) {
    shift2 += has_diagonal_shift(c, 2) ? 1 : 0;
    shift3 += has_diagonal_shift(c, 3) ? 1 : 0;
  }
  doc["diagonal_shift_2"] = shift2;
  doc["diagonal_shift_3"] = shift3;
  if (!count_only) {
    auto list = nlohmann::ordered_json::array();
    for (const auto& c : found) {
      auto grid = nlohmann::ordered_json::array();
      for (int j = 0; j < height; ++j) {
        std::vector<int> row;
        for (int i = 0; i < width; ++i) row.push_back(c.at(i, j));
        grid.push_back(row);
      }
      list.push_back(std::move(grid));
    }
    doc["colorings"] = std::move(list);
  }
  out << doc.dump() << "\n";
  return kExitOk;
}

int cmd_selfcheck(bool quick, const std::string& fixture_dir, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<FixtureText> fixtures =
      fixture_dir.empty() ? embedded_fixtures() : load_fixture_dir(fixture_dir);
  bool all_ok = !fixtures.empty();
  for (const auto& f : fixtures) {
    const FixtureCheck check = check_fixture(f);
    all_ok = all_ok && check.ok();
    out << (check.ok() ? "PASS " : "FAIL ") << check.name;
    if (!check.ok()) {
      out << ": " << (check.rendered ? "verification failed" : "render mismatch")
          << (check.detail.empty() ? "" : ", " + check.detail);
    }
    out << "\n";
  }
  if (quick) {
    out << "SKIP agreement sweep (--quick)\n";
  } else {
    const SweepResult sweep = agreement_sweep(30);
    for (const auto& f : sweep.failures) out << "FAIL sweep " << f << "\n";
    out << (sweep.failures.empty() ? "PASS " : "FAIL ") << "agreement sweep, " << sweep.checked
        << " (sequence, k, t) cases with t <= 30\n";
    all_ok = all_ok && sweep.failures.empty();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  out << "selfcheck " << (all_ok ? "passed" : "FAILED") << " (" << fixtures.size()
      << " fixtures, " << ms << " ms)\n";
  return all_ok ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"S-packing colorings of integer distance graphs G(k,t)", "spackd"};
  app.require_subcommand(1);

  GraphArgs chi_args;
  std::string chi_format = "plain";
  auto* chi_cmd = app.add_subcommand("chi", "closed-form S-packing chromatic number");
  chi_args.add_to(*chi_cmd);
  chi_cmd->add_option("--format", chi_format, "output format (default plain)")->check(CLI::IsMember({"plain", "json"}));

  GraphArgs color_args;
  std::optional<std::int64_t> color_rows;
  std::vector<std::int64_t> color_range;
  std::string color_format = "matrix";
  bool color_plain = false;
  auto* color_cmd = app.add_subcommand("color", "emit the catalog coloring");
  color_args.add_to(*color_cmd);
  color_cmd->add_option("--rows", color_rows, "matrix rows (default: twice the longest pattern)");
  color_cmd->add_option("--range", color_range, "integers a..b for csv output")->expected(2);
  color_cmd->add_option("--format", color_format, "output format (default matrix)")
      ->check(CLI::IsMember({"matrix", "json", "csv"}));
  color_cmd->add_flag("--plain", color_plain, "omit the '*' reference-point markers");

  GraphArgs verify_args;
  std::string cert_path;
  std::string explicit_path;
  auto* verify_cmd = app.add_subcommand("verify", "verify a certificate or explicit coloring");
  verify_cmd->add_option("--cert", cert_path, "schema certificate (JSON)");
  verify_cmd->add_option("--explicit", explicit_path, "explicit coloring (CSV lines n,color)");
  verify_args.add_to(*verify_cmd, false);

  GraphArgs search_args;
  int search_colors = 0;
  std::int64_t search_window_size = 0;
  std::optional<std::uint64_t> search_budget;
  unsigned search_threads = 1;
  auto* search_cmd = app.add_subcommand("search", "exhaustive window search");
  search_args.add_to(*search_cmd);
  search_cmd->add_option("--colors", search_colors, "number of colors")->required();
  search_cmd->add_option("--window", search_window_size, "integers 0..window-1 to color")->required();
  search_cmd->add_option("--budget", search_budget, "node budget (default $SPACKD_BUDGET or 1e9)");
  search_cmd->add_option("--threads", search_threads, "worker threads (default 1)")->check(CLI::Range(1u, 256u));

  std::string enum_seq = "2^inf";
  int enum_colors = 0;
  int enum_width = 0;
  int enum_height = 0;
  std::int64_t enum_cap = kDefaultTorusCap;
  bool enum_count_only = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "all packing colorings of a torus grid");
  enum_cmd->add_option("--seq", enum_seq, "packing sequence (default 2^inf)");
  enum_cmd->add_option("--colors", enum_colors, "number of colors")->required();
  enum_cmd->add_option("--width", enum_width, "torus width")->required();
  enum_cmd->add_option("--height", enum_height, "torus height")->required();
  enum_cmd->add_option("--cap", enum_cap, "largest accepted width*height*colors");
  enum_cmd->add_flag("--count-only", enum_count_only, "omit the colorings from the output");

  bool quick = false;
  std::string fixture_dir;
  auto* self_cmd = app.add_subcommand("selfcheck", "reproduce the embedded matrix fixtures");
  self_cmd->add_flag("--quick", quick, "skip the t <= 30 agreement sweep");
  self_cmd->add_option("--fixture-dir", fixture_dir, "read fixtures from a directory instead");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*chi_cmd) return cmd_chi(chi_args, chi_format, out, err);
    if (*color_cmd) {
      return cmd_color(color_args, color_rows, color_range, color_format, color_plain, out, err);
    }
    if (*verify_cmd) {
      if (cert_path.empty() == explicit_path.empty()) {
        err << "error: verify needs exactly one of --cert or --explicit\n";
        return kExitUsage;
      }
      return cmd_verify(cert_path, explicit_path, verify_args, out);
    }
    if (*search_cmd) {
      return cmd_search(search_args, search_colors, search_window_size, search_budget,
                        search_threads, out, err);
    }
    if (*enum_cmd) {
      return cmd_enumerate(enum_seq, enum_colors, enum_width, enum_height, enum_cap,
                           enum_count_only, out);
    }
    if (*self_cmd) return cmd_selfcheck(quick, fixture_dir, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace spackd::cli

#include "spackd_cli/fixtures.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "spackd/catalog.hpp"
#include "spackd/error.hpp"
#include "spackd/schema.hpp"
#include "spackd/verifier.hpp"

namespace spackd::cli {
namespace {

struct MatrixName {
  PackingSequence seq;
  std::int64_t k;
  std::int64_t t;
};

MatrixName parse_matrix_name(std::string_view name) {
  static const std::array<std::pair<std::string_view, std::string_view>, 3> kSequences = {{
      {"s31", "1,1,2^inf"}, {"s32", "1,2^inf"}, {"s33", "2^inf"}}};
  long long k = 0;
  long long t = 0;
  char tag[4] = {};
  int consumed = 0;
  const std::string text(name);
  if (std::sscanf(text.c_str(), "%3s", tag) == 1 &&
      std::sscanf(text.c_str() + 3, "_k%lld_t%lld%n", &k, &t, &consumed) == 2 &&
      static_cast<std::size_t>(consumed) + 3 == text.size()) {
    for (const auto& [prefix, seq] : kSequences) {
      if (prefix == tag) return {PackingSequence::parse(seq), k, t};
    }
  }
  throw Error(ErrorKind::kParse, "unrecognized fixture name " + text);
}

bool is_layout(std::string_view name) { return name.starts_with("layout_"); }

// The (1,2^inf) family with head (A,0),(B,5),(A,0),(B,5) and tail (A,2)
// contains every 3-column window that any member of the family can show.
const SchemaFamily& layout_family() {
  static const SchemaFamily family = families::one_two(2, 1, 4);
  return family;
}

std::int64_t shift_after(char from, char to) {
  if (from == 'A' && to == 'A') return 2;
  if (from == 'A' && to == 'B') return 0;
  if (from == 'B' && to == 'A') return 5;
  throw Error(ErrorKind::kParse, std::string("no column ") + from + " followed by " + to);
}

std::string render_layout(std::string_view name, std::int64_t rows) {
  const std::string_view cols = name.substr(std::string_view("layout_").size());
  if (cols.size() != 3) throw Error(ErrorKind::kParse, "layout fixtures have three columns");
  const SchemaFamily& family = layout_family();
  std::vector<ColumnView> views;
  std::int64_t ref = 0;
  std::string header;
  for (std::size_t x = 0; x < cols.size(); ++x) {
    const auto it = std::find_if(family.patterns.begin(), family.patterns.end(),
                                 [&](const NamedPattern& p) { return p.name.size() == 1 && p.name[0] == cols[x]; });
    if (it == family.patterns.end()) {
      throw Error(ErrorKind::kParse, "unknown layout column " + std::string(1, cols[x]));
    }
    if (x > 0) ref -= shift_after(cols[x - 1], cols[x]);
    views.push_back({&it->pattern, ref});
    header += (x > 0 ? " " : "") + it->name;
  }
  return header + "\n" + render_columns(views, rows, true);
}

std::int64_t count_lines(std::string_view text) {
  return std::count(text.begin(), text.end(), '\n');
}

std::string first_difference(std::string_view expected, std::string_view actual) {
  std::istringstream e{std::string(expected)};
  std::istringstream a{std::string(actual)};
  std::string le;
  std::string la;
  for (int line = 1;; ++line) {
    const bool he = static_cast<bool>(std::getline(e, le));
    const bool ha = static_cast<bool>(std::getline(a, la));
    if (!he && !ha) return "trailing bytes differ";
    if (!he || !ha || le != la) {
      return "line " + std::to_string(line) + ": fixture \"" + (he ? le : "<eof>") +
             "\", rendered \"" + (ha ? la : "<eof>") + "\"";
    }
  }
}

std::string describe(const Violation& v) {
  return std::string(to_string(v.kind)) + " a=" + std::to_string(v.a) +
         " b=" + std::to_string(v.b) + " color=" + std::to_string(v.color);
}

}  // namespace

std::vector<FixtureText> load_fixture_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".txt") paths.push_back(entry.path());
  }
  if (ec) throw Error(ErrorKind::kParse, "cannot read fixture directory " + dir.string());
  std::sort(paths.begin(), paths.end());
  std::vector<FixtureText> out;
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    out.push_back({p.stem().string(), buf.str()});
  }
  return out;
}

std::string render_fixture(std::string_view name, std::int64_t rows) {
  if (is_layout(name)) return render_layout(name, rows);
  const MatrixName m = parse_matrix_name(name);
  return render_matrix(catalog_coloring(m.seq, m.k, m.t), rows, true);
}

FixtureCheck check_fixture(const FixtureText& fixture) {
  FixtureCheck out;
  out.name = fixture.name;
  try {
    const std::int64_t rows = count_lines(fixture.text) - (is_layout(fixture.name) ? 1 : 0);
    const std::string rendered = render_fixture(fixture.name, rows);
    out.rendered = rendered == fixture.text;
    if (!out.rendered) out.detail = first_difference(fixture.text, rendered);

    VerificationReport report;
    if (is_layout(fixture.name)) {
      report = verify_family(layout_family(), PackingSequence::parse("1,2^inf"));
    } else {
      const MatrixName m = parse_matrix_name(fixture.name);
      report = verify_schema(catalog_coloring(m.seq, m.k, m.t), m.seq);
    }
    out.verified = report.valid();
    if (!out.verified && out.detail.empty()) out.detail = describe(*report.violation);
  } catch (const std::exception& e) {
    out.detail = e.what();
  }
  return out;
}

SweepResult agreement_sweep(std::int64_t max_t) {
  static const std::array<std::string_view, 4> kSequences = {"1^inf", "1,1,2^inf", "1,2^inf",
                                                              "2^inf"};
  SweepResult out;
  for (const std::string_view text : kSequences) {
    const PackingSequence seq = PackingSequence::parse(text);
    for (std::int64_t t = 4; t <= max_t; ++t) {
      for (std::int64_t k = 3; k < t; ++k) {
        if (std::gcd(k, t) != 1) continue;
        ++out.checked;
        const std::string label =
            "(" + std::string(text) + ") k=" + std::to_string(k) + " t=" + std::to_string(t);
        try {
          const int expected = chi(seq, k, t).value;
          const ColoringSchema schema = catalog_coloring(seq, k, t);
          const VerificationReport report = verify_schema(schema, seq);
          if (!report.valid()) {
            out.failures.push_back(label + ": " + describe(*report.violation));
          } else if (static_cast<int>(schema.color_count()) != expected) {
            out.failures.push_back(label + ": uses " + std::to_string(schema.color_count()) +
                                   " colors, chi is " + std::to_string(expected));
          }
        } catch (const std::exception& e) {
          out.failures.push_back(label + ": " + e.what());
        }
      }
    }
  }
  return out;
}

}  // namespace spackd::cli

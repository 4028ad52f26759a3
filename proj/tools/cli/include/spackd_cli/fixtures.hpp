#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace spackd::cli {

struct FixtureText {
  std::string name;
  std::string text;
};

/// Matrix fixtures compiled into the binary from tools/fixtures.
const std::vector<FixtureText>& embedded_fixtures();

/// Every *.txt file in `dir`, sorted by name. Error(kParse) if unreadable.
std::vector<FixtureText> load_fixture_dir(const std::filesystem::path& dir);

/// Text the library produces for a fixture name with `rows` matrix rows.
///
/// `s31_kK_tT`, `s32_kK_tT`, `s33_kK_tT` render the catalog coloring of
/// G(K,T) for (1,1,2^inf), (1,2^inf) and (2^inf). `layout_XYZ` renders three
/// consecutive columns of the (1,2^inf) family with pattern names X, Y, Z,
/// preceded by a header line naming them. Error(kParse) for other names.
std::string render_fixture(std::string_view name, std::int64_t rows);

struct FixtureCheck {
  std::string name;
  bool rendered = false;  // byte-identical to the fixture
  bool verified = false;  // the underlying schema or family verifies
  std::string detail;     // first differing line, or the violation

  bool ok() const noexcept { return rendered && verified; }
};

FixtureCheck check_fixture(const FixtureText& fixture);

struct SweepResult {
  std::size_t checked = 0;
  std::vector<std::string> failures;
};

/// catalog_coloring verifies and uses exactly chi colors for every coprime
/// 3 <= k < t <= max_t and each of (1^inf), (1,1,2^inf), (1,2^inf), (2^inf).
SweepResult agreement_sweep(std::int64_t max_t);

}  // namespace spackd::cli

#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "spackd/catalog.hpp"
#include "spackd/error.hpp"
#include "spackd/search.hpp"

namespace spackd {
namespace {

const PackingSequence kOnes = PackingSequence::parse("1^inf");
const PackingSequence kOneOneTwo = PackingSequence::parse("1,1,2^inf");
const PackingSequence kOneTwo = PackingSequence::parse("1,2^inf");
const PackingSequence kTwo = PackingSequence::parse("2^inf");

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected spackd::Error";
  return ErrorKind::kParse;
}

TEST(Chi, Examples) {
  EXPECT_EQ(chi(kOneOneTwo, 3, 4).value, 4);
  EXPECT_EQ(chi(kOneTwo, 2, 3).value, 6);
  EXPECT_EQ(chi(kTwo, 4, 7).value, 5);
  EXPECT_EQ(chi(kTwo, 2, 3).value, 7);
  EXPECT_EQ(chi(kOnes, 3, 5).value, 2);
}

TEST(Chi, FormulaBranches) {
  EXPECT_EQ(chi(kOnes, 3, 4).value, 3);
  EXPECT_EQ(chi(PackingSequence::parse("1^3,2^inf"), 3, 4).value, 3);
  EXPECT_EQ(chi(PackingSequence::parse("1^3,2^inf"), 3, 5).value, 2);
  EXPECT_EQ(chi(kOneOneTwo, 3, 5).value, 2);
  EXPECT_EQ(chi(kOneTwo, 3, 4).value, 5);
  EXPECT_EQ(chi(kOneTwo, 1, 2).value, 5);
  EXPECT_EQ(chi(kTwo, 3, 5).value, 6);
  EXPECT_EQ(chi(kTwo, 1, 2).value, 5);
  EXPECT_EQ(chi(kTwo, 3, 4).value, 5);
  EXPECT_EQ(chi(kTwo, 3, 7).value, 6);
  EXPECT_TRUE(chi(kTwo, 3, 7).constructive);
  EXPECT_FALSE(chi(kTwo, 2, 7).constructive);
}

TEST(Chi, Errors) {
  EXPECT_EQ(kind_of([] { chi(PackingSequence::parse("1,3^inf"), 3, 4); }),
            ErrorKind::kUnsupportedSequence);
  EXPECT_EQ(kind_of([] { chi(kTwo, 6, 10); }), ErrorKind::kNotConnected);
  EXPECT_EQ(kind_of([] { chi(kTwo, 4, 4); }), ErrorKind::kInvalidSpec);
  EXPECT_EQ(chi_reduced(kTwo, 6, 10).value, 6);
}

// The closed form for k in {1, 2} is not constructive here; check it against
// search from both sides.
TEST(Chi, SmallKValuesMatchSearch) {
  for (const PackingSequence* seq : {&kOnes, &kOneOneTwo, &kOneTwo, &kTwo}) {
    for (std::int64_t t = 2; t <= 7; ++t) {
      for (std::int64_t k = 1; k <= 2 && k < t; ++k) {
        if (std::gcd(k, t) != 1) continue;
        const DistanceGraphSpec spec(k, t);
        const int value = chi(*seq, k, t).value;
        EXPECT_TRUE(certify_lower_bound(*seq, spec, value).certified)
            << seq->to_string() << " k=" << k << " t=" << t;
        EXPECT_EQ(search_window(*seq, spec, value, 8 * (k + t)).status, SearchStatus::kSat)
            << seq->to_string() << " k=" << k << " t=" << t;
      }
    }
  }
}

TEST(CatalogColoring, FourColoringOfG34) {
  const ColoringSchema s = catalog_coloring(kOneOneTwo, 3, 4);
  EXPECT_EQ(s.column_names(), (std::vector<std::string>{"X", "Y", "Y", "X"}));
  EXPECT_EQ(s.shifts(), (std::vector<std::int64_t>{0, 2, 0, 1}));
  EXPECT_EQ(s.color_count(), 4u);
  EXPECT_TRUE(verify_schema(s, kOneOneTwo).valid());
}

TEST(CatalogColoring, OneTwoOnG7_13UsesFamilyFive) {
  const ColoringSchema s = catalog_coloring(kOneTwo, 7, 13);
  std::vector<std::int64_t> shifts;
  std::vector<std::string> cols;
  for (int i = 0; i < 5; ++i) {
    shifts.insert(shifts.end(), {0, 5});
    cols.insert(cols.end(), {"A", "B"});
  }
  shifts.resize(13, 2);
  cols.resize(13, "A");
  EXPECT_EQ(families::select_index(7, 13), 5);
  EXPECT_EQ(s.shifts(), shifts);
  EXPECT_EQ(s.column_names(), cols);
  EXPECT_TRUE(verify_schema(s, kOneTwo).valid());
}

TEST(CatalogColoring, TwoDistanceOnG35UsesTwelvePattern) {
  const ColoringSchema s = catalog_coloring(kTwo, 3, 5);
  ASSERT_EQ(s.patterns().size(), 1u);
  EXPECT_EQ(s.patterns()[0].pattern, (Pattern{{1, 2, 3, 4, 5, 1, 6, 3, 2, 5, 4, 6}}));
  EXPECT_EQ(s.shifts(), std::vector<std::int64_t>(5, 3));
  EXPECT_EQ(s.color_count(), 6u);
}

TEST(CatalogColoring, DiagonalFiveColorings) {
  const ColoringSchema a = catalog_coloring(kTwo, 4, 7);
  EXPECT_EQ(a.patterns()[0].pattern, (Pattern{{1, 3, 5, 2, 4}}));
  EXPECT_EQ(a.shifts(), std::vector<std::int64_t>(7, 2));
  const ColoringSchema b = catalog_coloring(kTwo, 6, 7);
  EXPECT_EQ(b.patterns()[0].pattern, (Pattern{{1, 3, 5, 4, 2}}));
  EXPECT_EQ(b.shifts(), std::vector<std::int64_t>(7, 3));
}

TEST(CatalogColoring, Errors) {
  EXPECT_EQ(kind_of([] { catalog_coloring(kTwo, 2, 3); }), ErrorKind::kConstructiveOutOfScope);
  EXPECT_EQ(kind_of([] { catalog_coloring(kOneTwo, 1, 4); }), ErrorKind::kConstructiveOutOfScope);
  EXPECT_EQ(kind_of([] { catalog_coloring(PackingSequence::parse("2,3^inf"), 3, 4); }),
            ErrorKind::kUnsupportedSequence);
  EXPECT_EQ(kind_of([] { catalog_coloring(kTwo, 3, 6); }), ErrorKind::kNotConnected);
}

// Every catalog coloring for small graphs, restricted to a window, has no
// same-colored pair within s_c by breadth-first distances.
TEST(CatalogColoring, WindowsPassBruteForce) {
  for (const PackingSequence* seq : {&kOnes, &kOneOneTwo, &kOneTwo, &kTwo}) {
    for (std::int64_t t = 4; t <= 9; ++t) {
      for (std::int64_t k = 3; k < t; ++k) {
        if (std::gcd(k, t) != 1) continue;
        const ExplicitColoring c = coloring_for_range(*seq, k, t, -60, 60);
        const auto close = oracle::find_close_pair(
            c, k, t, [&](int color) { return seq->at(static_cast<std::size_t>(color)); });
        EXPECT_FALSE(close.has_value()) << seq->to_string() << " k=" << k << " t=" << t;
        int used = 0;
        for (const auto& [n, color] : c) used = std::max(used, color);
        EXPECT_EQ(used, chi(*seq, k, t).value);
      }
    }
  }
}

TEST(ColoringForRange, Examples) {
  const ExplicitColoring a = coloring_for_range(kOneOneTwo, 3, 4, 0, 3);
  ASSERT_EQ(a.size(), 4u);
  EXPECT_EQ(a.at(0), 1);
  EXPECT_EQ(a.at(3), 3);
  EXPECT_TRUE(coloring_for_range(kOneOneTwo, 3, 4, 5, 4).empty());
  const ExplicitColoring b = coloring_for_range(kOnes, 3, 5, 0, 9);
  for (std::int64_t n = 0; n <= 9; ++n) EXPECT_EQ(b.at(n), n % 2 == 0 ? 1 : 2);
}

TEST(Families, SelectIndex) {
  EXPECT_EQ(families::select_index(7, 13), 5);
  EXPECT_EQ(families::select_index(4, 5), 0);
  for (std::int64_t t = 4; t < 40; ++t) {
    for (std::int64_t k = 1; k < t; ++k) {
      const int n = families::select_index(k, t);
      EXPECT_EQ(floor_mod(n + 2 * t - k, 6), 0);
    }
  }
}

}  // namespace
}  // namespace spackd

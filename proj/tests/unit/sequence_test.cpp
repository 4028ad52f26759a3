#include <gtest/gtest.h>

#include "spackd/error.hpp"
#include "spackd/sequence.hpp"

namespace spackd {
namespace {

ErrorKind parse_error(std::string_view text) {
  try {
    PackingSequence::parse(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorKind::kParse;
}

TEST(SequenceParse, Examples) {
  const PackingSequence a = PackingSequence::parse("1,1,2^inf");
  EXPECT_EQ(a.prefix(), (std::vector<int>{1, 1}));
  EXPECT_EQ(a.tail(), 2);
  const PackingSequence b = PackingSequence::parse("2^inf");
  EXPECT_TRUE(b.prefix().empty());
  EXPECT_EQ(b.tail(), 2);
  EXPECT_EQ(parse_error("2,1^inf"), ErrorKind::kMalformedSequence);
}

TEST(SequenceParse, AcceptsRunsParenthesesAndWhitespace) {
  EXPECT_EQ(PackingSequence::parse(" ( 1^2 , 2^inf ) "), PackingSequence::parse("1,1,2^inf"));
  EXPECT_EQ(PackingSequence::parse("1,2,2,2^inf"), PackingSequence::parse("1,2^inf"));
  EXPECT_EQ(PackingSequence::parse("1^3,3^inf").at(4), 3);
}

TEST(SequenceParse, RejectsMalformedText) {
  for (const char* bad : {"", "1,2", "1^inf,2^inf", "2^inf,3", "0^inf", "-1,2^inf", "1,,2^inf",
                          "a^inf", "2^0,3^inf", "2^x", "3,2^inf"}) {
    EXPECT_EQ(parse_error(bad), ErrorKind::kMalformedSequence) << bad;
  }
}

TEST(SequenceAt, Examples) {
  const PackingSequence s = PackingSequence::parse("1,2^inf");
  EXPECT_EQ(s.at(1), 1);
  EXPECT_EQ(s.at(5), 2);
  EXPECT_EQ(PackingSequence::parse("1,1,2^inf").at(2), 1);
  EXPECT_THROW(s.at(0), Error);
}

TEST(SequenceText, CollapsesRuns) {
  EXPECT_EQ(PackingSequence::parse("1,1,2^inf").to_string(), "1^2,2^inf");
  EXPECT_EQ(PackingSequence::parse("1,2^inf").to_string(), "1,2^inf");
  EXPECT_EQ(PackingSequence({1, 1, 2, 3}, 3).to_string(), "1^2,2,3^inf");
  for (const char* text : {"1^inf", "1,2,3^inf", "1^4,2^2,5^inf"}) {
    const PackingSequence s = PackingSequence::parse(text);
    EXPECT_EQ(PackingSequence::parse(s.to_string()), s);
  }
}

TEST(SequenceClassify, Examples) {
  EXPECT_EQ(classify(PackingSequence::parse("2^inf")).family, SequenceFamily::kAllTwos);
  const SequenceClass c = classify(PackingSequence::parse("1,1,2^inf"));
  EXPECT_EQ(c.family, SequenceFamily::kOnesThenTwos);
  EXPECT_EQ(c.ones, 2);
  EXPECT_EQ(classify(PackingSequence::parse("1,3^inf")).family, SequenceFamily::kOther);
  EXPECT_EQ(classify(PackingSequence::parse("1^inf")).family, SequenceFamily::kAllOnes);
  EXPECT_EQ(classify(PackingSequence::parse("1^5,2^inf")).ones, 5);
  EXPECT_EQ(classify(PackingSequence::parse("1,2,2,3^inf")).family, SequenceFamily::kOther);
}

}  // namespace
}  // namespace spackd

#include <gtest/gtest.h>

#include "generators.hpp"
#include "robparse/error.hpp"
#include "robparse/normal_parser.hpp"
#include "robparse/recovery.hpp"

namespace robparse {
namespace {

using namespace literals;
using testing::make_sentence;

Grammar toy() {
  Grammar g = read_grammar_text("1\tS -> NP VP\n1\tNP -> dt nn\n1\tVP -> vb NP\n1\tVP -> vb\n");
  apply_default_heuristic_sets(g);
  return g;
}

TEST(NormalParser, ParsesGrammaticalInput) {
  auto r = parse_normal(toy(), make_sentence({"dt", "nn", "vb", "dt", "nn"}));
  ASSERT_TRUE(r.success);
  ASSERT_EQ(r.trees.size(), 1u);
  EXPECT_EQ(r.trees[0].error, 0_cost);
  EXPECT_EQ(write_tree(r.trees[0].root),
            "(S (NP w0/dt w1/nn) (VP w2/vb (NP w3/dt w4/nn)))");
}

TEST(NormalParser, ReturnsEveryAmbiguousParse) {
  // vb NP PP vs vb (NP NP PP): two attachments.
  auto r = parse_normal(testing::english_grammar(),
                        make_sentence({"prp", "vb", "dt", "nn", "in", "dt", "nn"}));
  ASSERT_TRUE(r.success);
  EXPECT_EQ(r.trees.size(), 3u);
  for (const auto& t : r.trees) EXPECT_EQ(t.error, 0_cost);
}

TEST(NormalParser, FailureKeepsRecognizedPhrases) {
  Grammar g = toy();
  auto r = parse_normal(g, make_sentence({"dt", "nn", "vb", "dt"}));
  EXPECT_FALSE(r.success);
  EXPECT_TRUE(r.trees.empty());
  // NP -> dt nn . spanning [0, 2) is in S(2).
  EXPECT_TRUE(r.chart.find(2, {1, 2, 0}));
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics[0], "no complete parse");
}

TEST(NormalParser, ReportsUnknownTerminal) {
  auto r = parse_normal(toy(), make_sentence({"dt", "zz", "vb"}));
  EXPECT_FALSE(r.success);
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics[0], "unknown terminal 'zz' at position 1");
}

TEST(NormalParser, RejectsEmptyInput) {
  EXPECT_THROW(parse_normal(toy(), make_sentence({})), Error);
}

TEST(NormalParser, AdmitsNothingWithPositiveError) {
  Grammar g = toy();
  auto r = parse_normal(g, make_sentence({"dt", "vb", "nn", "dt"}), kUnlimited, true);
  for (const auto& ev : r.chart.log()) {
    if (ev.result == AdmitResult::Admitted || ev.result == AdmitResult::ReplacedWorse)
      EXPECT_EQ(ev.error, 0_cost);
  }
}

TEST(NormalParser, FailureChartIsContainedInRobustChart) {
  Grammar g = toy();
  auto s = make_sentence({"dt", "nn", "vb", "dt"});
  auto normal = parse_normal(g, s);
  ASSERT_FALSE(normal.success);
  RecoverOptions o;
  o.exhaustive = true;
  auto robust = recover(g, s, o);
  for (std::size_t i = 0; i <= s.tags.size(); ++i)
    for (StateId id : normal.chart.stateset(i)) {
      auto other = robust.chart.find(i, normal.chart.state(id).key);
      ASSERT_TRUE(other);
      EXPECT_EQ(robust.chart.state(*other).error, 0_cost);
    }
}

}  // namespace
}  // namespace robparse

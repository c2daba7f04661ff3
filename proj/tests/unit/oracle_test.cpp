// The reference implementations are only useful if they are right, so they
// get hand-computed cases of their own.
#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracle.hpp"

namespace robparse {
namespace {

using namespace literals;

Grammar toy() {
  Grammar g = read_grammar_text("1\tS -> NP VP\n1\tNP -> dt nn\n1\tVP -> vb NP\n1\tVP -> vb\n");
  apply_default_heuristic_sets(g);
  return g;
}

TEST(Oracle, SpanTableHandComputedCosts) {
  Grammar g = toy();
  CostParams p;
  EXPECT_EQ(testing::span_table_min_error(g, {"dt", "nn", "vb"}, p), 0_cost);
  EXPECT_EQ(testing::span_table_min_error(g, {"dt", "vb", "dt", "nn"}, p), 10.41_cost);
  EXPECT_EQ(testing::span_table_min_error(g, {"dt", "nn", "dt", "nn"}, p), 10.4_cost);
  EXPECT_EQ(testing::span_table_min_error(g, {"dt", "nn", "vb", "comma", "rb", "comma"}, p),
            14_cost);
  g.set_fiducials({});
  EXPECT_EQ(testing::span_table_min_error(g, {"dt", "vb", "dt", "nn"}, p), 10.4_cost);
}

TEST(Oracle, EnumeratesLanguage) {
  auto lang = testing::enumerate_language(toy(), 5);
  EXPECT_EQ(lang.size(), 2u);
  EXPECT_EQ(testing::language_edit_distance(toy(), {"dt", "vb"}, 6), 1u);
  EXPECT_EQ(testing::language_edit_distance(toy(), {"jj"}, 6), 3u);
}

TEST(Oracle, PairwiseCrossings) {
  std::vector<Bracket> gold{{"X", 0, 4}, {"X", 1, 3}};
  EXPECT_EQ(testing::brute_force_crossings({{"X", 2, 4}, {"X", 0, 2}, {"X", 3, 4}}, gold), 2u);
}

}  // namespace
}  // namespace robparse

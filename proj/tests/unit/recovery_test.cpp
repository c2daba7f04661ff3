#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "oracle.hpp"
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

std::string best(const Grammar& g, const std::vector<std::string>& tags,
                 RecoverOptions o = {}) {
  auto r = recover(g, make_sentence(tags), o);
  if (r.trees.empty()) return "none";
  return r.trees[0].error.str() + " " + write_tree(r.trees[0].root);
}

TEST(Recovery, GrammaticalInputCostsNothing) {
  EXPECT_EQ(best(toy(), {"dt", "nn", "vb", "dt", "nn"}),
            "0.0 (S (NP w0/dt w1/nn) (VP w2/vb (NP w3/dt w4/nn)))");
}

TEST(Recovery, SingleDeletionOutsideFiducial) {
  Grammar g = toy();
  g.set_fiducials({});
  EXPECT_EQ(best(g, {"dt", "vb", "dt", "nn"}),
            "10.4 (S (NP w0/dt /nn*DEL(10.4)) (VP w1/vb (NP w2/dt w3/nn)))");
}

TEST(Recovery, DeletionInsideFiducialCarriesSurcharge) {
  EXPECT_EQ(best(toy(), {"dt", "vb", "dt", "nn"}),
            "10.41 (S (NP w0/dt /nn*DEL(10.41)) (VP w1/vb (NP w2/dt w3/nn)))");
  EXPECT_EQ(best(toy(), {"dt", "nn", "dt", "nn"}),
            "10.4 (S (NP w0/dt w1/nn) (VP /vb*DEL(10.4) (NP w2/dt w3/nn)))");
}

TEST(Recovery, DelimitedTailIsSkippedAsSubstring) {
  auto r = recover(toy(), make_sentence({"dt", "nn", "vb", "comma", "rb", "comma"}), {});
  ASSERT_FALSE(r.trees.empty());
  EXPECT_EQ(r.trees[0].error, 14_cost);
  EXPECT_NE(write_tree(r.trees[0].root).find("(SUB*PINS(SUB,14.0) w3/comma w4/rb w5/comma)"),
            std::string::npos);
}

TEST(Recovery, MisusedTerminalDeletionIsDiscounted) {
  Grammar g = read_grammar_text("1\tS -> NP comma VP\n1\tS -> NP VP rb\n1\tNP -> dt nn\n1\tVP -> vb\n");
  apply_default_heuristic_sets(g);
  RecoverOptions o;
  o.max_trees = 2;
  auto r = recover(g, make_sentence({"dt", "nn", "vb"}), o);
  ASSERT_EQ(r.trees.size(), 2u);
  EXPECT_EQ(r.trees[0].error, 5.4_cost);
  EXPECT_EQ(write_tree(r.trees[0].root),
            "(S (NP w0/dt w1/nn) /comma*DEL(5.4) (VP w2/vb))");
  EXPECT_EQ(r.trees[1].error, 10.4_cost);
}

TEST(Recovery, NothingWithinBudget) {
  RecoverOptions o;
  o.budget = 5_cost;
  auto r = recover(toy(), make_sentence({"vb", "vb", "vb"}), o);
  EXPECT_TRUE(r.trees.empty());
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics[0], "no parse within error budget 5.0");
}

TEST(Recovery, RejectsInvalidParamsAndEmptyInput) {
  RecoverOptions o;
  o.params.alpha_deletion = 1_cost;
  EXPECT_THROW(recover(toy(), make_sentence({"dt"}), o), Error);
  EXPECT_THROW(recover(toy(), make_sentence({}), {}), Error);
}

TEST(Recovery, TreesComeInAscendingErrorAndAddUp) {
  RecoverOptions o;
  o.max_trees = 25;
  auto r = recover(toy(), make_sentence({"dt", "jj", "nn", "vb", "comma", "dt"}), o);
  ASSERT_GT(r.trees.size(), 1u);
  for (std::size_t i = 0; i < r.trees.size(); ++i) {
    EXPECT_EQ(total_cost(r.trees[i].root), r.trees[i].error);
    if (i > 0) EXPECT_LE(r.trees[i - 1].error, r.trees[i].error);
    EXPECT_EQ(yield_tags(r.trees[i].root),
              (std::vector<std::string>{"dt", "jj", "nn", "vb", "comma", "dt"}));
  }
}

// Property tests over random grammars.

struct RandomCase {
  Grammar grammar;
  std::vector<std::string> tags;
};

std::vector<RandomCase> random_cases(std::uint64_t seed, std::size_t count) {
  testing::Rng rng(seed);
  std::vector<RandomCase> out;
  while (out.size() < count) {
    Grammar g = testing::random_grammar(rng, 10);
    Tree t = testing::random_derivation(g, rng, 4);
    auto tags = testing::corrupt(g, t, rng, 1 + rng() % 2);
    if (tags.empty() || tags.size() > 7) continue;
    out.push_back({std::move(g), std::move(tags)});
  }
  return out;
}

TEST(RecoveryProperty, EveryTreeErrorIsItsHypothesisSum) {
  for (auto& c : random_cases(11, 40)) {
    RecoverOptions o;
    o.max_trees = 10;
    for (const auto& t : recover(c.grammar, make_sentence(c.tags), o).trees) {
      EXPECT_EQ(total_cost(t.root), t.error);
      EXPECT_EQ(yield_tags(t.root), c.tags);
    }
  }
}

TEST(RecoveryProperty, SeedingDoesNotChangeTheResult) {
  for (auto& c : random_cases(12, 40)) {
    auto s = make_sentence(c.tags);
    auto normal = parse_normal(c.grammar, s);
    if (normal.success) continue;
    RecoverOptions o;
    o.max_trees = 200;
    auto seeded = recover(c.grammar, s, o, &normal.chart);
    auto fresh = recover(c.grammar, s, o);
    ASSERT_EQ(seeded.trees.empty(), fresh.trees.empty());
    if (fresh.trees.empty()) continue;
    EXPECT_EQ(seeded.trees[0].error, fresh.trees[0].error);
    auto best_set = [](const RecoveryResult& r) {
      std::set<std::string> out;
      for (const auto& t : r.trees)
        if (t.error == r.trees[0].error) out.insert(write_tree(t.root));
      return out;
    };
    if (fresh.trees.size() < o.max_trees) EXPECT_EQ(best_set(seeded), best_set(fresh));
  }
}

TEST(RecoveryProperty, RaisingACostNeverLowersTheMinimum) {
  for (auto& c : random_cases(13, 30)) {
    auto s = make_sentence(c.tags);
    RecoverOptions base;
    base.budget = 200_cost;
    auto r0 = recover(c.grammar, s, base);
    Cost e0 = r0.trees.empty() ? Cost::infinity() : r0.trees[0].error;
    for (Cost CostParams::*field :
         {&CostParams::alpha_insertion, &CostParams::alpha_deletion,
          &CostParams::alpha_mutation, &CostParams::beta_insertion,
          &CostParams::beta_deletion}) {
      RecoverOptions raised = base;
      raised.params.*field = raised.params.*field + 3_cost;
      auto r1 = recover(c.grammar, s, raised);
      Cost e1 = r1.trees.empty() ? Cost::infinity() : r1.trees[0].error;
      EXPECT_GE(e1, e0);
    }
  }
}

TEST(RecoveryProperty, UnitCostsCountTerminalEdits) {
  // Phrase hypotheses priced out of reach: the minimum is then the edit
  // distance from the input to the nearest sentence of the language.
  CostParams p = CostParams::unit();
  p.beta_insertion = 100_cost;
  p.beta_deletion = 100_cost;
  for (auto& c : random_cases(14, 40)) {
    RecoverOptions o;
    o.params = p;
    o.budget = 99_cost;
    auto r = recover(c.grammar, make_sentence(c.tags), o);
    constexpr std::size_t kSlack = 4;
    std::size_t d = testing::language_edit_distance(c.grammar, c.tags, c.tags.size() + kSlack);
    // A sentence longer than n + d is at least that far away, so d is exact
    // whenever d <= kSlack.
    if (d > kSlack) continue;
    ASSERT_FALSE(r.trees.empty());
    EXPECT_EQ(r.trees[0].error.hundredths(), static_cast<std::int64_t>(d) * 100);
  }
}

}  // namespace
}  // namespace robparse

#include <gtest/gtest.h>

#include "robparse/config.hpp"
#include "robparse/error.hpp"

namespace robparse {
namespace {

using namespace literals;

TEST(Config, DefaultTextParsesToDefaults) {
  Config c = parse_config(default_config_text());
  EXPECT_EQ(c.params, CostParams{});
  EXPECT_EQ(c.fiducials, default_fiducials());
  EXPECT_EQ(c.misused_terminals, default_misused_terminals());
  EXPECT_EQ(c.pair_delimiters, default_pair_delimiters());
  EXPECT_FALSE(c.budget.has_value());
}

TEST(Config, ReadsValuesAndLists) {
  Config c = parse_config(
      "# experiment\n"
      "alpha_insertion = 3\n"
      "delta1=0   # no surcharge\n"
      "budget = 42.5\n"
      "fiducials = NP, VP\n"
      "misused_terminals = comma cc\n"
      "pair_delimiters = lparen:rparen\n"
      "start_symbol = TOP\n");
  EXPECT_EQ(c.params.alpha_insertion, 3_cost);
  EXPECT_EQ(c.params.delta1, 0_cost);
  EXPECT_EQ(c.budget, 42.5_cost);
  EXPECT_EQ(c.fiducials, (std::vector<std::string>{"NP", "VP"}));
  EXPECT_EQ(c.misused_terminals, (std::vector<std::string>{"comma", "cc"}));
  ASSERT_EQ(c.pair_delimiters.size(), 1u);
  EXPECT_EQ(c.pair_delimiters[0].first, "lparen");
  EXPECT_EQ(c.start_symbol, "TOP");
}

TEST(Config, EmptyListClearsSet) {
  Config c = parse_config("fiducials =\n");
  EXPECT_TRUE(c.fiducials.empty());
}

TEST(Config, RejectsUnknownDuplicateAndMalformed) {
  try {
    parse_config("alpha_insertion = 1\nbogus = 2\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_config("delta1 = 1\ndelta1 = 2\n"), SyntaxError);
  EXPECT_THROW(parse_config("delta1 1\n"), SyntaxError);
  EXPECT_THROW(parse_config("delta1 = x\n"), Error);
  EXPECT_THROW(parse_config("pair_delimiters = comma\n"), Error);
}

TEST(Config, AppliesSetsToGrammar) {
  Grammar g = read_grammar_text("1\tS -> NP VP\n1\tNP -> dt nn\n1\tVP -> vb\n");
  parse_config("fiducials = VP\nstart_symbol = NP\n").apply_to(g);
  EXPECT_TRUE(g.is_fiducial(*g.symbols().find(Symbol::nonterminal("VP"))));
  EXPECT_FALSE(g.is_fiducial(*g.symbols().find(Symbol::nonterminal("NP"))));
  EXPECT_EQ(g.symbol(g.start()).name, "NP");
}

}  // namespace
}  // namespace robparse

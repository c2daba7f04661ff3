#include <gtest/gtest.h>

#include "robparse/symbol.hpp"

namespace robparse {
namespace {

TEST(Symbol, NormalizesPunctuationTags) {
  EXPECT_EQ(normalize_tag(","), "comma");
  EXPECT_EQ(normalize_tag("."), "period");
  EXPECT_EQ(normalize_tag("("), "lparen");
  EXPECT_EQ(normalize_tag("-LRB-"), "lparen");
  EXPECT_EQ(normalize_tag("-RRB-"), "rparen");
  EXPECT_EQ(normalize_tag("NN"), "nn");
  EXPECT_EQ(normalize_tag("PRP$"), normalize_tag("prp$"));
}

TEST(Symbol, NormalizesLabels) {
  EXPECT_EQ(normalize_label("np"), "NP");
  EXPECT_EQ(normalize_label("Vp"), "VP");
}

TEST(Symbol, TableInternsTerminalsAndNonterminalsSeparately) {
  SymbolTable t;
  SymbolId a = t.intern(Symbol::terminal("np"));
  SymbolId b = t.intern(Symbol::nonterminal("NP"));
  EXPECT_NE(a, b);
  EXPECT_EQ(t.intern(Symbol::terminal("np")), a);
  EXPECT_EQ(t.find_terminal("np"), a);
  EXPECT_FALSE(t.find_terminal("NP").has_value());
  EXPECT_EQ(t.size(), 2u);
}

}  // namespace
}  // namespace robparse

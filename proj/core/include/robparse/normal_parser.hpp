#ifndef ROBPARSE_NORMAL_PARSER_HPP
#define ROBPARSE_NORMAL_PARSER_HPP

#include <string>
#include <vector>

#include "robparse/chart.hpp"
#include "robparse/engine.hpp"

namespace robparse {

struct NormalParse {
  bool success = false;
  std::vector<ParseTree> trees;  // every error-free parse, when success
  Chart chart;                   // kept on failure to seed recovery
  std::vector<std::string> diagnostics;
};

/// Error-free pass: no hypotheses, budget 0. Predictions whose first RHS
/// symbol is a terminal are only made when it matches the next input tag.
/// Throws robparse::Error on empty input.
NormalParse parse_normal(const Grammar& grammar, const TaggedSentence& sentence,
                         std::size_t max_trees = kUnlimited,
                         bool log_admissions = false);

}  // namespace robparse

#endif  // ROBPARSE_NORMAL_PARSER_HPP

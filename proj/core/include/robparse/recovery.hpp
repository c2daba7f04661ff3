#ifndef ROBPARSE_RECOVERY_HPP
#define ROBPARSE_RECOVERY_HPP

#include <optional>
#include <string>
#include <vector>

#include "robparse/chart.hpp"
#include "robparse/cost_model.hpp"
#include "robparse/engine.hpp"

namespace robparse {

struct RecoverOptions {
  CostParams params;
  std::optional<Cost> budget;  // default: params.default_budget()
  std::size_t max_trees = 1;
  AgendaOrder order = AgendaOrder::BestFirst;
  /// Keep popping after max_trees goals have been found.
  bool exhaustive = false;
  bool log_admissions = false;
};

struct RecoveryResult {
  std::vector<ParseTree> trees;  // ascending error
  Chart chart;
  std::size_t edges = 0;
  std::vector<std::string> diagnostics;
};

/// Least-errors parse. With a seed chart from parse_normal the search starts
/// from the normal pass's states; the result does not depend on it.
/// Throws robparse::Error on empty input or invalid cost parameters.
RecoveryResult recover(const Grammar& grammar, const TaggedSentence& sentence,
                       const RecoverOptions& options,
                       const Chart* seed = nullptr);

}  // namespace robparse

#endif  // ROBPARSE_RECOVERY_HPP

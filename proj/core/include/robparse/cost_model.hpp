#ifndef ROBPARSE_COST_MODEL_HPP
#define ROBPARSE_COST_MODEL_HPP

#include <string>
#include <vector>

#include "robparse/cost.hpp"

namespace robparse {

/// Base costs and heuristic weights for error hypotheses.
struct CostParams {
  Cost alpha_insertion = Cost::from_hundredths(1020);
  Cost alpha_deletion = Cost::from_hundredths(1040);
  Cost alpha_mutation = Cost::from_hundredths(1080);
  Cost beta_insertion = Cost::from_hundredths(1500);
  Cost beta_deletion = Cost::from_hundredths(2000);
  Cost beta_mutation = Cost::from_hundredths(0);  // reserved, unused
  Cost delta1 = Cost::from_hundredths(1);         // fiducial surcharge
  Cost delta2 = Cost::from_hundredths(500);       // misused-terminal discount
  Cost delta3 = Cost::from_hundredths(100);       // delimited-insertion discount

  /// Every base cost 1, every delta 0: plain error counting.
  static CostParams unit();
  /// Same base costs with all deltas zeroed.
  CostParams without_heuristics() const;

  /// 3 x the largest effective single-hypothesis cost.
  Cost default_budget() const;

  bool operator==(const CostParams&) const = default;
};

enum class TerminalError { Insertion, Deletion, Mutation };
enum class PhraseError { Insertion, Deletion };

struct HypothesisContext {
  bool within_fiducial = false;  // receiving rule's lhs is fiducial
  bool symbol_misused = false;   // terminal involved is a misused tag
  bool delimited = false;        // inserted span is flanked by a pair
};

/// alpha(kind) + delta1 [fiducial] - delta2 [misused].
Cost terminal_cost(TerminalError kind, const HypothesisContext& ctx,
                   const CostParams& params);

/// Insertion: beta_ins - delta3 [delimited] + child_error.
/// Deletion: beta_del.
Cost phrase_cost(PhraseError kind, const HypothesisContext& ctx,
                 Cost child_error, const CostParams& params);

/// Violated positivity constraints, each rendered as an inequality such as
/// "alpha_deletion - delta2 > 0 (10.4 - 11.0)". Empty means valid.
std::vector<std::string> validate_cost_params(const CostParams& params);

/// Notices for configurations that break the intended ordering
/// alpha_deletion < alpha_insertion < alpha_mutation and
/// beta_deletion < beta_insertion. These are not errors.
std::vector<std::string> ordering_notices(const CostParams& params);

}  // namespace robparse

#endif  // ROBPARSE_COST_MODEL_HPP

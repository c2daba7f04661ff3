#include "robparse/cost_model.hpp"

#include <algorithm>

namespace robparse {

CostParams CostParams::unit() {
  CostParams p;
  const Cost one = Cost::from_hundredths(100);
  p.alpha_insertion = p.alpha_deletion = p.alpha_mutation = one;
  p.beta_insertion = p.beta_deletion = p.beta_mutation = one;
  p.delta1 = p.delta2 = p.delta3 = Cost::zero();
  return p;
}

CostParams CostParams::without_heuristics() const {
  CostParams p = *this;
  p.delta1 = p.delta2 = p.delta3 = Cost::zero();
  return p;
}

Cost CostParams::default_budget() const {
  Cost alpha = std::max({alpha_insertion, alpha_deletion, alpha_mutation}) + delta1;
  Cost beta = std::max(beta_insertion, beta_deletion);
  return std::max(alpha, beta) * 3;
}

Cost terminal_cost(TerminalError kind, const HypothesisContext& ctx,
                   const CostParams& params) {
  Cost c;
  switch (kind) {
    case TerminalError::Insertion: c = params.alpha_insertion; break;
    case TerminalError::Deletion: c = params.alpha_deletion; break;
    case TerminalError::Mutation: c = params.alpha_mutation; break;
  }
  if (ctx.within_fiducial) c += params.delta1;
  if (ctx.symbol_misused) c = c - params.delta2;
  return c;
}

Cost phrase_cost(PhraseError kind, const HypothesisContext& ctx,
                 Cost child_error, const CostParams& params) {
  if (kind == PhraseError::Deletion) return params.beta_deletion;
  Cost c = params.beta_insertion;
  if (ctx.delimited) c = c - params.delta3;
  return c + child_error;
}

std::vector<std::string> validate_cost_params(const CostParams& p) {
  std::vector<std::string> out;
  auto positive = [&](const char* name, Cost v) {
    if (v <= Cost::zero()) out.push_back(std::string(name) + " > 0 (" + v.str() + ")");
  };
  auto effective = [&](const char* base, Cost b, const char* delta, Cost d) {
    if (b - d <= Cost::zero())
      out.push_back(std::string(base) + " - " + delta + " > 0 (" + b.str() +
                    " - " + d.str() + ")");
  };
  positive("alpha_insertion", p.alpha_insertion);
  positive("alpha_deletion", p.alpha_deletion);
  positive("alpha_mutation", p.alpha_mutation);
  positive("beta_insertion", p.beta_insertion);
  positive("beta_deletion", p.beta_deletion);
  if (p.delta1 < Cost::zero()) out.push_back("delta1 >= 0 (" + p.delta1.str() + ")");
  if (p.delta2 < Cost::zero()) out.push_back("delta2 >= 0 (" + p.delta2.str() + ")");
  if (p.delta3 < Cost::zero()) out.push_back("delta3 >= 0 (" + p.delta3.str() + ")");
  effective("alpha_deletion", p.alpha_deletion, "delta2", p.delta2);
  effective("alpha_insertion", p.alpha_insertion, "delta2", p.delta2);
  effective("alpha_mutation", p.alpha_mutation, "delta2", p.delta2);
  effective("beta_insertion", p.beta_insertion, "delta3", p.delta3);
  effective("beta_deletion", p.beta_deletion, "delta3", p.delta3);
  return out;
}

std::vector<std::string> ordering_notices(const CostParams& p) {
  std::vector<std::string> out;
  if (!(p.alpha_deletion < p.alpha_insertion && p.alpha_insertion < p.alpha_mutation))
    out.push_back("terminal costs do not satisfy alpha_deletion < alpha_insertion < "
                  "alpha_mutation (" + p.alpha_deletion.str() + ", " +
                  p.alpha_insertion.str() + ", " + p.alpha_mutation.str() + ")");
  if (!(p.beta_deletion < p.beta_insertion))
    out.push_back("phrase costs do not satisfy beta_deletion < beta_insertion (" +
                  p.beta_deletion.str() + ", " + p.beta_insertion.str() + ")");
  return out;
}

}  // namespace robparse

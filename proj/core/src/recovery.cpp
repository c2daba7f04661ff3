#include "robparse/recovery.hpp"

#include "robparse/error.hpp"

namespace robparse {

RecoveryResult recover(const Grammar& grammar, const TaggedSentence& sentence,
                       const RecoverOptions& options, const Chart* seed) {
  if (sentence.tags.empty()) throw Error("empty input");
  if (auto violated = validate_cost_params(options.params); !violated.empty()) {
    std::string msg = "invalid cost parameters:";
    for (const auto& v : violated) msg += " " + v + ";";
    throw Error(msg);
  }

  EngineOptions eo;
  eo.robust = true;
  eo.params = options.params;
  eo.budget = options.budget;
  eo.order = options.order;
  eo.goal_limit = options.exhaustive ? kUnlimited : options.max_trees;
  eo.log_admissions = options.log_admissions;

  Engine engine(grammar, sentence, eo);
  if (seed) engine.seed(*seed);
  engine.run();

  RecoveryResult result{{}, Chart(0), 0, {}};
  result.trees = extract_trees(engine.chart(), grammar, engine.sentence(),
                               engine.goals(), options.max_trees);
  result.edges = engine.chart().admissions();
  if (result.trees.empty())
    result.diagnostics.push_back("no parse within error budget " +
                                 engine.chart().budget().value_or(Cost::infinity()).str());
  result.chart = std::move(engine).take_chart();
  return result;
}

}  // namespace robparse

#include "robparse/normal_parser.hpp"

#include "robparse/error.hpp"

namespace robparse {

NormalParse parse_normal(const Grammar& grammar, const TaggedSentence& sentence,
                         std::size_t max_trees, bool log_admissions) {
  if (sentence.tags.empty()) throw Error("empty input");

  NormalParse result{false, {}, Chart(0), {}};
  for (std::size_t i = 0; i < sentence.tags.size(); ++i)
    if (grammar.terminal_id(sentence.tags[i]) == kUnknownSymbol)
      result.diagnostics.push_back("unknown terminal '" + sentence.tags[i] +
                                   "' at position " + std::to_string(i));

  EngineOptions options;
  options.robust = false;
  options.budget = Cost::zero();
  options.log_admissions = log_admissions;
  Engine engine(grammar, sentence, options);
  engine.run();

  if (!engine.goals().empty()) {
    result.trees = extract_trees(engine.chart(), grammar, engine.sentence(),
                                 engine.goals(), max_trees);
    result.success = !result.trees.empty();
  }
  if (!result.success && result.diagnostics.empty())
    result.diagnostics.push_back("no complete parse");
  result.chart = std::move(engine).take_chart();
  return result;
}

}  // namespace robparse

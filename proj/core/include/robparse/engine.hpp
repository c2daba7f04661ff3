#ifndef ROBPARSE_ENGINE_HPP
#define ROBPARSE_ENGINE_HPP

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "robparse/chart.hpp"
#include "robparse/cost_model.hpp"
#include "robparse/grammar.hpp"
#include "robparse/treebank.hpp"

namespace robparse {

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

struct EngineOptions {
  /// Off: predictions, perfect matches and completions only.
  bool robust = false;
  CostParams params;
  /// Defaults to params.default_budget() when robust, 0 otherwise.
  std::optional<Cost> budget;
  AgendaOrder order = AgendaOrder::BestFirst;
  /// Best-first runs stop once this many start-spanning finals are popped.
  /// kUnlimited (and Fifo order) run the agenda dry.
  std::size_t goal_limit = kUnlimited;
  bool log_admissions = false;
};

/// Earley-style least-errors recognizer driven by the chart agenda.
///
/// Every popped state is combined with the states already popped, so the
/// first time a key leaves a best-first agenda its error is minimal. In
/// robust mode every rule is predicted at every position, which lets any
/// recognized phrase serve as an inserted phrase.
class Engine {
 public:
  Engine(const Grammar& grammar, const TaggedSentence& sentence,
         EngineOptions options);

  /// Imports a chart from an earlier pass over the same input.
  void seed(const Chart& chart);

  /// Initial predictions followed by the agenda loop.
  void run();

  // Whole-stateset forms of the hypothesis steps. run() applies the same
  // steps one popped state at a time; these sweep S(i) as it stands and
  // only admit, so tests can observe a single step.
  void scan(std::size_t i);
  void complete_extended(std::size_t i);
  void substring_insertion(std::size_t i);
  void predict(std::size_t i);

  const Chart& chart() const { return chart_; }
  Chart& chart() { return chart_; }
  Chart take_chart() && { return std::move(chart_); }

  const Grammar& grammar() const { return grammar_; }
  const TaggedSentence& sentence() const { return sentence_; }
  const std::vector<SymbolId>& tokens() const { return tokens_; }
  const EngineOptions& options() const { return options_; }

  /// Start-spanning finals popped so far, in pop order.
  const std::vector<StateId>& goals() const { return goals_; }

  /// (a, b) with t(a) = open and t(b) = close for a configured pair; for
  /// distinct open/close the closer is the balanced one, for identical ones
  /// it is the next occurrence.
  const std::vector<std::pair<std::size_t, std::size_t>>& delimited_spans()
      const {
    return delimited_;
  }

  bool is_delimited(std::size_t begin, std::size_t end) const;

 private:
  bool is_final(const State& s) const;
  bool is_goal(const State& s) const;
  std::optional<SymbolId> next_symbol(const State& s) const;
  HypothesisContext terminal_context(const State& s, SymbolId involved,
                                     SymbolId other = kUnknownSymbol) const;

  void admit(std::size_t position, std::uint32_t rule, std::uint32_t dot,
             std::uint32_t origin, Cost error, Backpointer back);
  void predict_rule(std::size_t position, std::size_t rule);

  // Single-state steps shared by run() and the sweeps.
  void terminal_steps(StateId id);
  void phrase_match(StateId waiting, StateId final_state);
  void phrase_insert(StateId waiting, StateId final_state);
  void phrase_delete(StateId waiting);
  void skip_delimited(StateId id);
  void normal_predict(StateId id);

  void process(StateId id);
  void find_delimited_spans();

  const Grammar& grammar_;
  TaggedSentence sentence_;
  std::vector<SymbolId> tokens_;
  EngineOptions options_;
  Chart chart_;
  std::vector<std::pair<std::size_t, std::size_t>> delimited_;

  // Popped-state indexes.
  std::vector<bool> processed_;
  std::vector<std::vector<StateId>> popped_at_;          // by position
  std::vector<std::vector<StateId>> finals_from_;        // by origin
  std::vector<std::vector<bool>> predicted_;             // [position][lhs]
  std::vector<StateId> goals_;
};

/// Trees for the given start-spanning finals, in order, at most max_trees.
/// Ties within one final follow backpointer order.
std::vector<ParseTree> extract_trees(const Chart& chart, const Grammar& grammar,
                                     const TaggedSentence& sentence,
                                     const std::vector<StateId>& goals,
                                     std::size_t max_trees);

/// Same, over every start-spanning final in the chart by ascending error.
std::vector<ParseTree> extract_trees(const Chart& chart, const Grammar& grammar,
                                     const TaggedSentence& sentence,
                                     std::size_t max_trees);

/// One line per admission: `i (p j f e cause)`, j 1-based, p the rule id.
void write_chart_dump(std::ostream& os, const Chart& chart,
                      const Grammar& grammar);

}  // namespace robparse

#endif  // ROBPARSE_ENGINE_HPP

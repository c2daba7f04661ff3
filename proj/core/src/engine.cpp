#include "robparse/engine.hpp"

#include <algorithm>
#include <ostream>

#include "robparse/error.hpp"

namespace robparse {

namespace {

struct Snapshot {
  StateKey key;
  std::size_t position;
  Cost error;
};

Snapshot snap(const Chart& chart, StateId id) {
  const State& s = chart.state(id);
  return {s.key, s.position, s.error};
}

}  // namespace

Engine::Engine(const Grammar& grammar, const TaggedSentence& sentence,
               EngineOptions options)
    : grammar_(grammar),
      sentence_(sentence),
      options_(options),
      chart_(sentence.tags.size(), options.order,
             options.budget ? options.budget
                            : std::optional<Cost>(options.robust
                                                      ? options.params.default_budget()
                                                      : Cost::zero())) {
  if (sentence_.words.size() != sentence_.tags.size()) sentence_.words = sentence_.tags;
  for (const auto& tag : sentence_.tags) tokens_.push_back(grammar_.terminal_id(tag));
  const std::size_t n = tokens_.size();
  popped_at_.resize(n + 1);
  finals_from_.resize(n + 1);
  predicted_.assign(n + 1, std::vector<bool>(grammar_.symbols().size(), false));
  chart_.set_logging(options_.log_admissions);
  find_delimited_spans();
}

void Engine::find_delimited_spans() {
  const std::size_t n = tokens_.size();
  for (const auto& pair : grammar_.pair_delimiters()) {
    if (pair.open == pair.close) {
      for (std::size_t a = 0; a < n; ++a) {
        if (tokens_[a] != pair.open) continue;
        for (std::size_t b = a + 1; b < n; ++b)
          if (tokens_[b] == pair.close) {
            delimited_.emplace_back(a, b);
            break;
          }
      }
    } else {
      std::vector<std::size_t> open;
      for (std::size_t b = 0; b < n; ++b) {
        if (tokens_[b] == pair.open) {
          open.push_back(b);
        } else if (tokens_[b] == pair.close && !open.empty()) {
          delimited_.emplace_back(open.back(), b);
          open.pop_back();
        }
      }
    }
  }
  std::sort(delimited_.begin(), delimited_.end());
  delimited_.erase(std::unique(delimited_.begin(), delimited_.end()), delimited_.end());
}

bool Engine::is_delimited(std::size_t begin, std::size_t end) const {
  if (end < begin + 2 || end > tokens_.size()) return false;
  for (const auto& pair : grammar_.pair_delimiters())
    if (tokens_[begin] == pair.open && tokens_[end - 1] == pair.close) return true;
  return false;
}

bool Engine::is_final(const State& s) const {
  return s.key.dot == grammar_.rule(s.key.rule).rhs.size();
}

bool Engine::is_goal(const State& s) const {
  return is_final(s) && s.key.origin == 0 && s.position == tokens_.size() &&
         grammar_.rule(s.key.rule).lhs == grammar_.start();
}

std::optional<SymbolId> Engine::next_symbol(const State& s) const {
  const Rule& r = grammar_.rule(s.key.rule);
  if (s.key.dot >= r.rhs.size()) return std::nullopt;
  return r.rhs[s.key.dot];
}

HypothesisContext Engine::terminal_context(const State& s, SymbolId involved,
                                           SymbolId other) const {
  HypothesisContext ctx;
  ctx.within_fiducial = grammar_.is_fiducial(grammar_.rule(s.key.rule).lhs);
  ctx.symbol_misused = grammar_.is_misused(involved) ||
                       (other != kUnknownSymbol && grammar_.is_misused(other));
  return ctx;
}

void Engine::admit(std::size_t position, std::uint32_t rule, std::uint32_t dot,
                   std::uint32_t origin, Cost error, Backpointer back) {
  chart_.admit(position, StateKey{rule, dot, origin}, error, back);
}

void Engine::predict_rule(std::size_t position, std::size_t rule) {
  admit(position, static_cast<std::uint32_t>(rule), 0,
        static_cast<std::uint32_t>(position), Cost::zero(),
        Backpointer{Cause::Predict, {}, {}, Cost::zero()});
}

void Engine::seed(const Chart& chart) { chart_.import_states(chart); }

// ---------------------------------------------------------------------------
// Single-state steps

void Engine::terminal_steps(StateId id) {
  const State& st = chart_.state(id);
  const Snapshot s = snap(chart_, id);
  const std::size_t i = s.position;
  const std::size_t n = tokens_.size();
  const auto next = next_symbol(st);
  const HypothesisContext ins_ctx =
      i < n ? terminal_context(st, tokens_[i]) : HypothesisContext{};

  if (next && grammar_.is_terminal(*next)) {
    const SymbolId expected = *next;
    HypothesisContext del_ctx = terminal_context(st, expected);
    HypothesisContext mut_ctx =
        i < n ? terminal_context(st, expected, tokens_[i]) : HypothesisContext{};
    if (i < n && tokens_[i] == expected) {
      admit(i + 1, s.key.rule, s.key.dot + 1, s.key.origin, s.error,
            {Cause::PerfectMatch, id, {}, Cost::zero()});
    }
    if (options_.robust) {
      if (i < n && tokens_[i] != expected) {
        Cost c = terminal_cost(TerminalError::Mutation, mut_ctx, options_.params);
        admit(i + 1, s.key.rule, s.key.dot + 1, s.key.origin, s.error + c,
              {Cause::MutErr, id, {}, c});
      }
      Cost c = terminal_cost(TerminalError::Deletion, del_ctx, options_.params);
      admit(i, s.key.rule, s.key.dot + 1, s.key.origin, s.error + c,
            {Cause::DelErr, id, {}, c});
    }
  }
  if (options_.robust && i < n) {
    Cost c = terminal_cost(TerminalError::Insertion, ins_ctx, options_.params);
    admit(i + 1, s.key.rule, s.key.dot, s.key.origin, s.error + c,
          {Cause::InsErr, id, {}, c});
  }
}

void Engine::phrase_match(StateId waiting, StateId final_state) {
  const Snapshot w = snap(chart_, waiting);
  const Snapshot f = snap(chart_, final_state);
  admit(f.position, w.key.rule, w.key.dot + 1, w.key.origin, w.error + f.error,
        {Cause::PhraseComplete, waiting, final_state, Cost::zero()});
}

void Engine::phrase_insert(StateId waiting, StateId final_state) {
  const Snapshot w = snap(chart_, waiting);
  const Snapshot f = snap(chart_, final_state);
  if (f.position <= w.position) return;
  HypothesisContext ctx;
  ctx.delimited = is_delimited(w.position, f.position);
  Cost c = phrase_cost(PhraseError::Insertion, ctx, Cost::zero(), options_.params);
  admit(f.position, w.key.rule, w.key.dot, w.key.origin, w.error + c + f.error,
        {Cause::PhraseIns, waiting, final_state, c});
}

void Engine::phrase_delete(StateId waiting) {
  const Snapshot w = snap(chart_, waiting);
  Cost c = phrase_cost(PhraseError::Deletion, {}, Cost::zero(), options_.params);
  admit(w.position, w.key.rule, w.key.dot + 1, w.key.origin, w.error + c,
        {Cause::PhraseDel, waiting, {}, c});
}

void Engine::skip_delimited(StateId id) {
  const Snapshot s = snap(chart_, id);
  HypothesisContext ctx;
  ctx.delimited = true;
  Cost c = phrase_cost(PhraseError::Insertion, ctx, Cost::zero(), options_.params);
  for (const auto& [a, b] : delimited_) {
    if (a != s.position) continue;
    admit(b + 1, s.key.rule, s.key.dot, s.key.origin, s.error + c,
          {Cause::SubstringIns, id, {}, c});
  }
}

void Engine::normal_predict(StateId id) {
  const Snapshot s = snap(chart_, id);
  const auto next = next_symbol(chart_.state(id));
  if (!next || grammar_.is_terminal(*next)) return;
  std::vector<bool>& done = predicted_[s.position];
  if (next->value < done.size() && done[next->value]) return;
  if (next->value < done.size()) done[next->value] = true;
  for (std::size_t r : grammar_.rules_for(*next)) {
    SymbolId first = grammar_.rule(r).rhs.front();
    if (!options_.robust && grammar_.is_terminal(first) &&
        (s.position >= tokens_.size() || tokens_[s.position] != first))
      continue;
    predict_rule(s.position, r);
  }
}

// ---------------------------------------------------------------------------
// Agenda loop

void Engine::process(StateId id) {
  if (processed_.size() <= id.value) processed_.resize(chart_.size(), false);
  const Snapshot s = snap(chart_, id);
  const bool final_state = is_final(chart_.state(id));
  if (!processed_[id.value]) {
    processed_[id.value] = true;
    popped_at_[s.position].push_back(id);
    if (final_state) finals_from_[s.key.origin].push_back(id);
  }
  if (options_.order == AgendaOrder::BestFirst && is_goal(chart_.state(id)))
    goals_.push_back(id);

  terminal_steps(id);

  if (!final_state) {
    const SymbolId next = *next_symbol(chart_.state(id));
    if (!grammar_.is_terminal(next)) {
      if (!options_.robust) normal_predict(id);
      const auto& finals = finals_from_[s.position];
      for (std::size_t k = 0; k < finals.size(); ++k) {
        StateId f = finals[k];
        if (grammar_.rule(chart_.state(f).key.rule).lhs == next) phrase_match(id, f);
      }
      if (options_.robust) phrase_delete(id);
    }
  }

  if (options_.robust) {
    const auto& finals = finals_from_[s.position];
    for (std::size_t k = 0; k < finals.size(); ++k) phrase_insert(id, finals[k]);
    skip_delimited(id);
  }

  if (final_state) {
    const SymbolId lhs = grammar_.rule(s.key.rule).lhs;
    const auto& waiting = popped_at_[s.key.origin];
    for (std::size_t k = 0; k < waiting.size(); ++k) {
      StateId w = waiting[k];
      auto next = next_symbol(chart_.state(w));
      if (next && *next == lhs) phrase_match(w, id);
      if (options_.robust && s.position > s.key.origin) phrase_insert(w, id);
    }
  }
}

void Engine::run() {
  const std::size_t n = tokens_.size();
  if (options_.robust) {
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t r = 0; r < grammar_.rules().size(); ++r) predict_rule(i, r);
  } else {
    for (std::size_t r : grammar_.rules_for(grammar_.start())) {
      SymbolId first = grammar_.rule(r).rhs.front();
      if (grammar_.is_terminal(first) && (n == 0 || tokens_[0] != first)) continue;
      predict_rule(0, r);
    }
  }

  const bool bounded = options_.order == AgendaOrder::BestFirst &&
                       options_.goal_limit != kUnlimited;
  while (auto id = chart_.pop_min()) {
    process(*id);
    if (bounded && goals_.size() >= options_.goal_limit) break;
  }

  if (options_.order == AgendaOrder::Fifo) {
    goals_.clear();
    for (StateId id : chart_.stateset(n))
      if (is_goal(chart_.state(id))) goals_.push_back(id);
    std::stable_sort(goals_.begin(), goals_.end(), [&](StateId a, StateId b) {
      const State& sa = chart_.state(a);
      const State& sb = chart_.state(b);
      return std::tie(sa.error, sa.key.rule) < std::tie(sb.error, sb.key.rule);
    });
  }
}

// ---------------------------------------------------------------------------
// Whole-stateset sweeps

void Engine::scan(std::size_t i) {
  if (i >= tokens_.size()) throw Error("scan position out of range");
  for (StateId id : chart_.ordered_stateset(i)) terminal_steps(id);
}

void Engine::complete_extended(std::size_t i) {
  for (StateId f : chart_.ordered_stateset(i)) {
    const State& fs = chart_.state(f);
    if (!is_final(fs)) continue;
    const std::size_t k = fs.key.origin;
    const SymbolId lhs = grammar_.rule(fs.key.rule).lhs;
    for (StateId w : chart_.ordered_stateset(k)) {
      if (w == f) continue;
      auto next = next_symbol(chart_.state(w));
      if (next && *next == lhs) phrase_match(w, f);
      if (options_.robust) {
        if (i > k) phrase_insert(w, f);
        if (next && !grammar_.is_terminal(*next)) phrase_delete(w);
      }
    }
  }
  predict(i);
}

void Engine::substring_insertion(std::size_t i) {
  for (StateId id : chart_.ordered_stateset(i)) skip_delimited(id);
}

void Engine::predict(std::size_t i) {
  for (StateId id : chart_.ordered_stateset(i)) {
    auto next = next_symbol(chart_.state(id));
    if (!next || grammar_.is_terminal(*next)) continue;
    for (std::size_t r : grammar_.rules_for(*next)) {
      SymbolId first = grammar_.rule(r).rhs.front();
      if (!options_.robust && grammar_.is_terminal(first) &&
          (i >= tokens_.size() || tokens_[i] != first))
        continue;
      predict_rule(i, r);
    }
  }
}

// ---------------------------------------------------------------------------
// Chart dump

void write_chart_dump(std::ostream& os, const Chart& chart, const Grammar& grammar) {
  auto line = [&](std::size_t i, const StateKey& k, Cost e, Cause cause) {
    os << i << " (" << grammar.rule(k.rule).id.value << ' ' << k.dot + 1 << ' '
       << k.origin << ' ' << e << ' ' << cause_name(cause) << ")\n";
  };
  if (!chart.log().empty()) {
    for (const auto& ev : chart.log())
      if (ev.result == AdmitResult::Admitted || ev.result == AdmitResult::ReplacedWorse)
        line(ev.position, ev.key, ev.error, ev.cause);
    return;
  }
  for (std::size_t i = 0; i <= chart.input_length(); ++i)
    for (StateId id : chart.ordered_stateset(i)) {
      const State& s = chart.state(id);
      line(i, s.key, s.error, s.back.empty() ? Cause::Predict : s.back.front().cause);
    }
}

}  // namespace robparse

#include "robparse/chart.hpp"

#include <algorithm>
#include <tuple>

#include "robparse/error.hpp"

namespace robparse {

std::string_view cause_name(Cause cause) {
  switch (cause) {
    case Cause::Predict: return "Predict";
    case Cause::PerfectMatch: return "PerfectMatch";
    case Cause::InsErr: return "InsErr";
    case Cause::DelErr: return "DelErr";
    case Cause::MutErr: return "MutErr";
    case Cause::PhraseComplete: return "PhraseComplete";
    case Cause::PhraseIns: return "PhraseIns";
    case Cause::PhraseDel: return "PhraseDel";
    case Cause::SubstringIns: return "SubstringIns";
  }
  return "?";
}

Chart::Chart(std::size_t input_length, AgendaOrder order, std::optional<Cost> budget)
    : sets_(input_length + 1), order_(order), budget_(budget) {}

// Stateset order: f descending, then p ascending, then j ascending.
static auto stateset_rank(const StateKey& k) {
  return std::make_tuple(~k.origin, k.rule, k.dot);
}

bool Chart::PendingAfter::operator()(const Pending& a, const Pending& b) const {
  // priority_queue pops the largest; "after" means lower priority.
  return std::make_tuple(a.error, a.position, stateset_rank(a.key)) >
         std::make_tuple(b.error, b.position, stateset_rank(b.key));
}

void Chart::record(std::size_t position, StateKey key, Cost error, Cause cause,
                   AdmitResult result) {
  if (logging_)
    log_.push_back({static_cast<std::uint32_t>(position), key, error, cause, result});
}

void Chart::enqueue(StateId id) {
  const State& s = states_[id.value];
  Pending p{s.error, s.position, s.key, id};
  if (order_ == AgendaOrder::BestFirst)
    heap_.push(p);
  else
    fifo_.push_back(p);
}

AdmitResult Chart::admit(std::size_t position, StateKey key, Cost error,
                         const Backpointer& back) {
  if (position >= sets_.size())
    throw Error("stateset " + std::to_string(position) + " out of range 0.." +
                std::to_string(sets_.size() - 1));
  if (budget_ && error > *budget_) {
    record(position, key, error, back.cause, AdmitResult::RejectedBudget);
    return AdmitResult::RejectedBudget;
  }
  StateSet& set = sets_[position];
  auto it = set.index.find(key);
  if (it != set.index.end()) {
    State& s = states_[it->second.value];
    if (s.error < error) {
      record(position, key, error, back.cause, AdmitResult::RejectedDominated);
      return AdmitResult::RejectedDominated;
    }
    if (s.error == error) {
      if (std::find(s.back.begin(), s.back.end(), back) == s.back.end())
        s.back.push_back(back);
      record(position, key, error, back.cause, AdmitResult::RejectedDominated);
      return AdmitResult::RejectedDominated;
    }
    s.error = error;
    s.back.assign(1, back);
    ++admissions_;
    enqueue(it->second);
    record(position, key, error, back.cause, AdmitResult::ReplacedWorse);
    return AdmitResult::ReplacedWorse;
  }
  StateId id{static_cast<std::uint32_t>(states_.size())};
  states_.push_back(State{key, static_cast<std::uint32_t>(position), error, {back}});
  set.index.emplace(key, id);
  set.members.push_back(id);
  ++admissions_;
  enqueue(id);
  record(position, key, error, back.cause, AdmitResult::Admitted);
  return AdmitResult::Admitted;
}

std::optional<StateId> Chart::pop_min() {
  for (;;) {
    Pending p;
    if (order_ == AgendaOrder::BestFirst) {
      if (heap_.empty()) return std::nullopt;
      p = heap_.top();
      heap_.pop();
    } else {
      if (fifo_.empty()) return std::nullopt;
      p = fifo_.front();
      fifo_.pop_front();
    }
    if (states_[p.id.value].error == p.error) return p.id;
  }
}

bool Chart::has_pending() {
  // Drop stale heads so the answer reflects live entries only.
  if (order_ == AgendaOrder::BestFirst) {
    while (!heap_.empty() && states_[heap_.top().id.value].error != heap_.top().error)
      heap_.pop();
    return !heap_.empty();
  }
  while (!fifo_.empty() && states_[fifo_.front().id.value].error != fifo_.front().error)
    fifo_.pop_front();
  return !fifo_.empty();
}

std::optional<StateId> Chart::find(std::size_t position, StateKey key) const {
  if (position >= sets_.size()) return std::nullopt;
  const auto& index = sets_[position].index;
  auto it = index.find(key);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<StateId> Chart::ordered_stateset(std::size_t position) const {
  std::vector<StateId> out = sets_.at(position).members;
  std::sort(out.begin(), out.end(), [&](StateId a, StateId b) {
    return stateset_rank(state(a).key) < stateset_rank(state(b).key);
  });
  return out;
}

void Chart::import_states(const Chart& other) {
  if (other.input_length() != input_length())
    throw Error("cannot import a chart over a different input length");
  if (!states_.empty()) throw Error("states can only be imported into an empty chart");
  std::vector<StateId> mapped(other.states_.size());
  for (std::size_t i = 0; i < other.states_.size(); ++i) {
    const State& s = other.states_[i];
    admit(s.position, s.key, s.error, Backpointer{});
    mapped[i] = find(s.position, s.key).value_or(StateId{});
  }
  auto translate = [&](StateId id) { return id.valid() ? mapped[id.value] : id; };
  for (std::size_t i = 0; i < other.states_.size(); ++i) {
    if (!mapped[i].valid()) continue;
    const State& s = other.states_[i];
    State& mine = states_[mapped[i].value];
    std::vector<Backpointer> back;
    for (Backpointer b : s.back) {
      if ((b.pred.valid() && !translate(b.pred).valid()) ||
          (b.child.valid() && !translate(b.child).valid()))
        continue;
      b.pred = translate(b.pred);
      b.child = translate(b.child);
      back.push_back(b);
    }
    mine.back = std::move(back);
  }
}

}  // namespace robparse

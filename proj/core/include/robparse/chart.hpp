#ifndef ROBPARSE_CHART_HPP
#define ROBPARSE_CHART_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <queue>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "robparse/cost.hpp"

namespace robparse {

/// How a state was derived from its predecessor.
enum class Cause : std::uint8_t {
  Predict,
  PerfectMatch,
  InsErr,
  DelErr,
  MutErr,
  PhraseComplete,
  PhraseIns,
  PhraseDel,
  SubstringIns,
};

std::string_view cause_name(Cause cause);

struct StateId {
  std::uint32_t value = 0xffffffffu;
  bool valid() const { return value != 0xffffffffu; }
  auto operator<=>(const StateId&) const = default;
};

/// (p, j, f) without the error value. `rule` is the dense rule index and
/// `dot` counts RHS components already recognized (0-based).
struct StateKey {
  std::uint32_t rule = 0;
  std::uint32_t dot = 0;
  std::uint32_t origin = 0;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    std::uint64_t h = k.rule;
    h = h * 0x9e3779b97f4a7c15ull + k.dot;
    h = h * 0x9e3779b97f4a7c15ull + k.origin;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// `pred` is the state one step earlier in the same rule (absent for
/// predictions); `child` is the final state substituted by PhraseComplete or
/// PhraseIns. `cost` is the hypothesis cost added by this step alone.
struct Backpointer {
  Cause cause = Cause::Predict;
  StateId pred;
  StateId child;
  Cost cost;
  bool operator==(const Backpointer&) const = default;
};

struct State {
  StateKey key;
  std::uint32_t position = 0;
  Cost error;
  std::vector<Backpointer> back;  // all predecessors achieving `error`
};

enum class AdmitResult {
  Admitted,
  ReplacedWorse,
  RejectedDominated,
  RejectedBudget,
};

enum class AgendaOrder { BestFirst, Fifo };

struct AdmissionEvent {
  std::uint32_t position = 0;
  StateKey key;
  Cost error;
  Cause cause = Cause::Predict;
  AdmitResult result = AdmitResult::Admitted;
};

/// Statesets S(0..n) with dominance filtering and a pending-state agenda.
class Chart {
 public:
  explicit Chart(std::size_t input_length,
                 AgendaOrder order = AgendaOrder::BestFirst,
                 std::optional<Cost> budget = std::nullopt);

  std::size_t input_length() const { return sets_.size() - 1; }
  std::optional<Cost> budget() const { return budget_; }
  AgendaOrder order() const { return order_; }

  /// Dominance rule: a stored (p, j, f) with e' <= e rejects the candidate
  /// (an equal e' still records the extra backpointer); e' > e is replaced
  /// and re-queued. Throws robparse::Error for a position outside 0..n.
  AdmitResult admit(std::size_t position, StateKey key, Cost error,
                    const Backpointer& back);

  /// Pending state with the least error (BestFirst) or the oldest pending
  /// state (Fifo). Entries superseded by a cheaper replacement are skipped.
  std::optional<StateId> pop_min();
  bool has_pending();

  const State& state(StateId id) const { return states_[id.value]; }
  std::optional<StateId> find(std::size_t position, StateKey key) const;

  /// Admission order.
  const std::vector<StateId>& stateset(std::size_t position) const {
    return sets_.at(position).members;
  }
  /// Ordered by f descending, then p, then j ascending.
  std::vector<StateId> ordered_stateset(std::size_t position) const;

  std::size_t size() const { return states_.size(); }
  /// Admitted plus ReplacedWorse outcomes.
  std::size_t admissions() const { return admissions_; }

  void set_logging(bool on) { logging_ = on; }
  const std::vector<AdmissionEvent>& log() const { return log_; }

  /// Copies every state and backpointer of `other` into this empty chart.
  void import_states(const Chart& other);

 private:
  struct StateSet {
    std::unordered_map<StateKey, StateId, StateKeyHash> index;
    std::vector<StateId> members;
  };
  struct Pending {
    Cost error;
    std::uint32_t position;
    StateKey key;
    StateId id;
  };
  struct PendingAfter {
    bool operator()(const Pending& a, const Pending& b) const;
  };

  void enqueue(StateId id);
  void record(std::size_t position, StateKey key, Cost error, Cause cause,
              AdmitResult result);

  std::vector<StateSet> sets_;
  std::vector<State> states_;
  AgendaOrder order_;
  std::optional<Cost> budget_;
  std::priority_queue<Pending, std::vector<Pending>, PendingAfter> heap_;
  std::deque<Pending> fifo_;
  std::size_t admissions_ = 0;
  bool logging_ = false;
  std::vector<AdmissionEvent> log_;
};

}  // namespace robparse

#endif  // ROBPARSE_CHART_HPP

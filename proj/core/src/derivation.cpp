#include <algorithm>

#include "robparse/engine.hpp"

namespace robparse {

namespace {

/// Walks backpointer sets into trees. States already on the current path
/// are skipped, which cuts zero-cost unit cycles.
class TreeBuilder {
 public:
  TreeBuilder(const Chart& chart, const Grammar& grammar, const TaggedSentence& sentence)
      : chart_(chart), grammar_(grammar), sentence_(sentence),
        on_path_(chart.size(), false) {}

  std::vector<Tree> phrases(StateId final_state, std::size_t limit) {
    std::vector<Tree> out;
    const State& s = chart_.state(final_state);
    const std::string& label = grammar_.symbol(grammar_.rule(s.key.rule).lhs).name;
    for (auto& seq : sequences(final_state, limit))
      out.push_back(Tree::node(label, std::move(seq)));
    return out;
  }

 private:
  using Sequence = std::vector<Tree>;

  std::string word(std::size_t i) const {
    return i < sentence_.words.size() ? sentence_.words[i] : sentence_.tags[i];
  }

  bool consistent(const State& s, const Backpointer& bp) const {
    if (bp.cause == Cause::Predict) return s.key.dot == 0 && s.error == Cost::zero();
    if (!bp.pred.valid()) return false;
    Cost sum = chart_.state(bp.pred).error + bp.cost;
    if (bp.child.valid()) sum += chart_.state(bp.child).error;
    return sum == s.error;
  }

  const std::string& expected_name(const State& pred) const {
    const Rule& r = grammar_.rule(pred.key.rule);
    return grammar_.symbol(r.rhs[pred.key.dot]).name;
  }

  std::vector<Sequence> sequences(StateId id, std::size_t limit) {
    std::vector<Sequence> out;
    if (limit == 0 || on_path_[id.value]) return out;
    on_path_[id.value] = true;
    const State& s = chart_.state(id);

    for (const Backpointer& bp : s.back) {
      if (out.size() >= limit) break;
      if (!consistent(s, bp)) continue;
      if (bp.cause == Cause::Predict) {
        out.emplace_back();
        continue;
      }
      const State& pred = chart_.state(bp.pred);
      const std::size_t room = limit - out.size();
      std::vector<Sequence> heads = sequences(bp.pred, room);
      if (heads.empty()) continue;

      std::vector<Tree> tails;
      switch (bp.cause) {
        case Cause::PerfectMatch: {
          std::size_t t = s.position - 1;
          tails.push_back(Tree::leaf(word(t), sentence_.tags[t]));
          break;
        }
        case Cause::MutErr: {
          std::size_t t = s.position - 1;
          Tree leaf = Tree::leaf(word(t), expected_name(pred));
          Hypothesis h{Hypothesis::Kind::Mutation, bp.cost, "", sentence_.tags[t],
                       expected_name(pred)};
          leaf.hypothesis = h;
          tails.push_back(std::move(leaf));
          break;
        }
        case Cause::InsErr: {
          std::size_t t = s.position - 1;
          Tree leaf = Tree::leaf(word(t), sentence_.tags[t]);
          leaf.hypothesis = Hypothesis{Hypothesis::Kind::Insertion, bp.cost, "", "", ""};
          tails.push_back(std::move(leaf));
          break;
        }
        case Cause::DelErr: {
          Tree leaf = Tree::leaf("", expected_name(pred));
          leaf.hypothesis = Hypothesis{Hypothesis::Kind::Deletion, bp.cost, "", "", ""};
          tails.push_back(std::move(leaf));
          break;
        }
        case Cause::PhraseDel: {
          const std::string& label = expected_name(pred);
          Tree node = Tree::node(label, {});
          node.hypothesis =
              Hypothesis{Hypothesis::Kind::PhraseDeletion, bp.cost, label, "", ""};
          tails.push_back(std::move(node));
          break;
        }
        case Cause::SubstringIns: {
          std::vector<Tree> leaves;
          for (std::size_t t = pred.position; t < s.position; ++t)
            leaves.push_back(Tree::leaf(word(t), sentence_.tags[t]));
          Tree node = Tree::node("SUB", std::move(leaves));
          node.hypothesis =
              Hypothesis{Hypothesis::Kind::PhraseInsertion, bp.cost, "SUB", "", ""};
          tails.push_back(std::move(node));
          break;
        }
        case Cause::PhraseComplete:
        case Cause::PhraseIns: {
          tails = phrases(bp.child, room);
          if (bp.cause == Cause::PhraseIns) {
            for (auto& t : tails)
              t.hypothesis = Hypothesis{Hypothesis::Kind::PhraseInsertion, bp.cost,
                                        t.label, "", ""};
          }
          break;
        }
        case Cause::Predict:
          break;
      }

      for (const auto& head : heads) {
        for (const auto& tail : tails) {
          if (out.size() >= limit) break;
          Sequence seq = head;
          seq.push_back(tail);
          out.push_back(std::move(seq));
        }
        if (out.size() >= limit) break;
      }
    }

    on_path_[id.value] = false;
    return out;
  }

  const Chart& chart_;
  const Grammar& grammar_;
  const TaggedSentence& sentence_;
  std::vector<bool> on_path_;
};

}  // namespace

std::vector<ParseTree> extract_trees(const Chart& chart, const Grammar& grammar,
                                     const TaggedSentence& sentence,
                                     const std::vector<StateId>& goals,
                                     std::size_t max_trees) {
  std::vector<ParseTree> out;
  TreeBuilder builder(chart, grammar, sentence);
  for (StateId goal : goals) {
    if (out.size() >= max_trees) break;
    for (auto& tree : builder.phrases(goal, max_trees - out.size()))
      out.push_back(ParseTree{std::move(tree), chart.state(goal).error});
  }
  return out;
}

std::vector<ParseTree> extract_trees(const Chart& chart, const Grammar& grammar,
                                     const TaggedSentence& sentence,
                                     std::size_t max_trees) {
  const std::size_t n = chart.input_length();
  std::vector<StateId> goals;
  for (StateId id : chart.ordered_stateset(n)) {
    const State& s = chart.state(id);
    const Rule& r = grammar.rule(s.key.rule);
    if (s.key.origin == 0 && s.key.dot == r.rhs.size() && r.lhs == grammar.start())
      goals.push_back(id);
  }
  std::stable_sort(goals.begin(), goals.end(), [&](StateId a, StateId b) {
    return chart.state(a).error < chart.state(b).error;
  });
  return extract_trees(chart, grammar, sentence, goals, max_trees);
}

}  // namespace robparse

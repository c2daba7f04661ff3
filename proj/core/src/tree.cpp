#include "robparse/tree.hpp"

namespace robparse {

Tree Tree::leaf(std::string word, std::string tag) {
  Tree t;
  t.label = std::move(tag);
  t.word = std::move(word);
  return t;
}

Tree Tree::node(std::string label, std::vector<Tree> children) {
  Tree t;
  t.label = std::move(label);
  t.children = std::move(children);
  return t;
}

std::size_t token_count(const Tree& tree) {
  if (tree.is_leaf())
    return tree.hypothesis &&
                   tree.hypothesis->kind == Hypothesis::Kind::Deletion
               ? 0
               : 1;
  std::size_t n = 0;
  for (const auto& c : tree.children) n += token_count(c);
  return n;
}

Cost total_cost(const Tree& tree) {
  Cost sum = tree.hypothesis ? tree.hypothesis->cost : Cost::zero();
  for (const auto& c : tree.children) sum += total_cost(c);
  return sum;
}

namespace {
void collect_tags(const Tree& t, std::vector<std::string>& out) {
  if (t.is_leaf()) {
    if (!t.hypothesis) {
      out.push_back(t.label);
    } else if (t.hypothesis->kind == Hypothesis::Kind::Mutation) {
      out.push_back(t.hypothesis->original);
    } else if (t.hypothesis->kind != Hypothesis::Kind::Deletion) {
      out.push_back(t.label);
    }
    return;
  }
  for (const auto& c : t.children) collect_tags(c, out);
}
}  // namespace

std::vector<std::string> yield_tags(const Tree& tree) {
  std::vector<std::string> out;
  collect_tags(tree, out);
  return out;
}

}  // namespace robparse

#ifndef ROBPARSE_TREE_HPP
#define ROBPARSE_TREE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robparse/cost.hpp"

namespace robparse {

/// Error hypothesis attached to a tree node by the recovery pass.
struct Hypothesis {
  enum class Kind {
    Insertion,        // *INS(cost)        inserted input token
    Deletion,         // *DEL(cost)        expected terminal missing
    Mutation,         // *MUT(orig→new,cost)
    PhraseInsertion,  // *PINS(label,cost) inserted phrase or delimited span
    PhraseDeletion,   // *PDEL(label,cost) expected phrase missing
  };
  Kind kind = Kind::Insertion;
  Cost cost;
  std::string label;     // PINS / PDEL
  std::string original;  // MUT: input tag
  std::string replaced;  // MUT: grammar tag

  bool operator==(const Hypothesis&) const = default;
};

/// Labeled bracketing. Leaves carry a word and a tag (`label`); internal
/// nodes carry a phrase label and at least one child, except phrase-deletion
/// nodes which are empty.
struct Tree {
  std::string label;
  std::optional<std::string> word;  // set iff leaf
  std::vector<Tree> children;
  std::optional<Hypothesis> hypothesis;

  static Tree leaf(std::string word, std::string tag);
  static Tree node(std::string label, std::vector<Tree> children);

  bool is_leaf() const { return word.has_value(); }
  bool operator==(const Tree&) const = default;
};

/// Number of input tokens covered (deleted leaves and phrase-deletion
/// nodes cover none).
std::size_t token_count(const Tree& tree);

/// Sum of hypothesis costs over all nodes.
Cost total_cost(const Tree& tree);

/// Tags of the input tokens under the tree, in order.
std::vector<std::string> yield_tags(const Tree& tree);

struct ParseTree {
  Tree root;
  Cost error;
  bool operator==(const ParseTree&) const = default;
};

}  // namespace robparse

#endif  // ROBPARSE_TREE_HPP

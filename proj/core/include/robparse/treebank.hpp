#ifndef ROBPARSE_TREEBANK_HPP
#define ROBPARSE_TREEBANK_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "robparse/tree.hpp"

namespace robparse {

/// Reads Penn-style bracketings with word/tag leaves.
///
/// An unlabeled outer bracket around a single tree is dropped; one around
/// several children becomes a TOP node. Lines starting with '#' between
/// trees are skipped. Leaves with empty words or the -NONE- tag are dropped
/// (each drop adds a warning when `warnings` is given). Hypothesis markers
/// written by write_tree are read back.
std::vector<Tree> read_trees(std::string_view text,
                             std::vector<std::string>* warnings = nullptr);

/// One-line bracketing; inverse of read_trees up to whitespace.
std::string write_tree(const Tree& tree);

struct TaggedSentence {
  std::size_t id = 0;  // 1-based, counting non-blank lines
  std::vector<std::string> words;
  std::vector<std::string> tags;  // normalized
};

/// One sentence per line of word/tag tokens; blank lines are skipped.
std::vector<TaggedSentence> read_tagged(std::string_view text);

struct Bracket {
  std::string label;
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
  auto operator<=>(const Bracket&) const = default;
};

/// Constituent spans in token offsets (sorted, unique). Leaves contribute
/// no spans. Nodes covering no tokens, or only inserted material, are
/// left out.
std::vector<Bracket> brackets_of(const Tree& tree);

}  // namespace robparse

#endif  // ROBPARSE_TREEBANK_HPP

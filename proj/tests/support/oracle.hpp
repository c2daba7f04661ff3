#ifndef ROBPARSE_TESTS_ORACLE_HPP
#define ROBPARSE_TESTS_ORACLE_HPP

// Independent reference computations. Nothing here goes through the chart
// or the engine.

#include <cstddef>
#include <string>
#include <vector>

#include "robparse/cost_model.hpp"
#include "robparse/grammar.hpp"
#include "robparse/treebank.hpp"

namespace robparse::testing {

/// Least total hypothesis cost of any repaired derivation of the start
/// symbol over `tags`, computed by an exhaustive table over every
/// (rule, dot, span) relaxed to a fixpoint one span length at a time.
/// Cost::infinity() when nothing derives the input.
Cost span_table_min_error(const Grammar& grammar, const std::vector<std::string>& tags,
                          const CostParams& params);

/// Minimum Levenshtein distance (unit insert/delete/substitute) between
/// `tags` and any sentence of the grammar no longer than `max_length`,
/// found by enumerating the language.
std::size_t language_edit_distance(const Grammar& grammar,
                                   const std::vector<std::string>& tags,
                                   std::size_t max_length);

/// Every sentence (as tag sequence) derivable with length <= max_length.
std::vector<std::vector<std::string>> enumerate_language(const Grammar& grammar,
                                                         std::size_t max_length);

/// Pairwise crossing count: candidate spans that strictly overlap some gold
/// span without nesting.
std::size_t brute_force_crossings(const std::vector<Bracket>& candidate,
                                  const std::vector<Bracket>& gold);

}  // namespace robparse::testing

#endif  // ROBPARSE_TESTS_ORACLE_HPP

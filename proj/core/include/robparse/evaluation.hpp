#ifndef ROBPARSE_EVALUATION_HPP
#define ROBPARSE_EVALUATION_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "robparse/treebank.hpp"

namespace robparse {

/// Candidate brackets that strictly overlap some gold bracket without
/// nesting. Labels are ignored; duplicates in `candidate` count separately.
/// Throws robparse::Error when a span exceeds `length`.
std::size_t crossings(const std::vector<Bracket>& candidate,
                      const std::vector<Bracket>& gold, std::size_t length);

struct SentenceResult {
  std::vector<Bracket> candidate;
  std::vector<Bracket> gold;
  std::size_t length = 0;
  std::optional<double> edges;
  std::optional<double> seconds;
};

struct Report {
  std::size_t sentences = 0;
  std::size_t excluded = 0;  // no candidate parse
  std::size_t constituents = 0;
  std::size_t non_crossing_constituents = 0;
  double accuracy = 0;                 // pooled, percent
  double mean_sentence_accuracy = 0;   // per-sentence mean, percent
  double no_crossing = 0;              // percent of sentences
  double at_most_one_crossing = 0;
  double at_most_two_crossings = 0;
  double mean_length = 0;
  std::size_t min_length = 0;
  std::size_t max_length = 0;
  std::optional<double> mean_edges;
  std::optional<double> mean_seconds;
};

/// Pools constituents over all sentences. Throws on an empty sequence.
Report accuracy(const std::vector<SentenceResult>& results,
                std::size_t excluded = 0);

/// Aligned rows in the layout of the published result tables.
void write_report_text(std::ostream& os, const Report& report);
/// key=value lines.
void write_report_keyvalue(std::ostream& os, const Report& report);

}  // namespace robparse

#endif  // ROBPARSE_EVALUATION_HPP

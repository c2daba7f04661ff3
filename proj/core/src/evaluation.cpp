#include "robparse/evaluation.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "robparse/error.hpp"

namespace robparse {

std::size_t crossings(const std::vector<Bracket>& candidate,
                      const std::vector<Bracket>& gold, std::size_t length) {
  auto check = [&](const Bracket& b, const char* side) {
    if (b.start > b.end || b.end > length)
      throw Error(std::string(side) + " span (" + std::to_string(b.start) + "," +
                  std::to_string(b.end) + ") does not fit a sentence of length " +
                  std::to_string(length));
  };
  // For each position: the farthest gold end among gold spans starting there,
  // and the nearest gold start among gold spans ending there.
  std::vector<std::ptrdiff_t> far_end(length + 1, -1);
  std::vector<std::ptrdiff_t> near_start(length + 1,
                                         static_cast<std::ptrdiff_t>(length) + 1);
  for (const auto& g : gold) {
    check(g, "gold");
    far_end[g.start] = std::max<std::ptrdiff_t>(far_end[g.start], g.end);
    near_start[g.end] = std::min<std::ptrdiff_t>(near_start[g.end], g.start);
  }
  std::size_t count = 0;
  for (const auto& c : candidate) {
    check(c, "candidate");
    const auto lo = static_cast<std::ptrdiff_t>(c.start);
    const auto hi = static_cast<std::ptrdiff_t>(c.end);
    bool crossed = false;
    for (std::size_t p = c.start + 1; p < c.end && !crossed; ++p)
      crossed = far_end[p] > hi || near_start[p] < lo;
    if (crossed) ++count;
  }
  return count;
}

Report accuracy(const std::vector<SentenceResult>& results, std::size_t excluded) {
  if (results.empty()) throw Error("no sentences to evaluate");
  Report r;
  r.sentences = results.size();
  r.excluded = excluded;
  r.min_length = results.front().length;
  std::size_t zero = 0, one = 0, two = 0;
  double sentence_acc = 0, total_length = 0, edges = 0, seconds = 0;
  bool all_edges = true, all_seconds = true;
  for (const auto& s : results) {
    std::size_t x = crossings(s.candidate, s.gold, s.length);
    r.constituents += s.candidate.size();
    r.non_crossing_constituents += s.candidate.size() - x;
    sentence_acc += s.candidate.empty()
                        ? 100.0
                        : 100.0 * static_cast<double>(s.candidate.size() - x) /
                              static_cast<double>(s.candidate.size());
    zero += x == 0;
    one += x <= 1;
    two += x <= 2;
    total_length += static_cast<double>(s.length);
    r.min_length = std::min(r.min_length, s.length);
    r.max_length = std::max(r.max_length, s.length);
    if (s.edges) edges += *s.edges; else all_edges = false;
    if (s.seconds) seconds += *s.seconds; else all_seconds = false;
  }
  const double n = static_cast<double>(results.size());
  r.accuracy = r.constituents == 0
                   ? 100.0
                   : 100.0 * static_cast<double>(r.non_crossing_constituents) /
                         static_cast<double>(r.constituents);
  r.mean_sentence_accuracy = sentence_acc / n;
  r.no_crossing = 100.0 * static_cast<double>(zero) / n;
  r.at_most_one_crossing = 100.0 * static_cast<double>(one) / n;
  r.at_most_two_crossings = 100.0 * static_cast<double>(two) / n;
  r.mean_length = total_length / n;
  if (all_edges) r.mean_edges = edges / n;
  if (all_seconds) r.mean_seconds = seconds / n;
  return r;
}

namespace {
std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}
}  // namespace

void write_report_text(std::ostream& os, const Report& r) {
  auto row = [&](const std::string& label, const std::string& value) {
    os << std::left << std::setw(36) << label << value << '\n';
  };
  row("Sentences", std::to_string(r.sentences));
  row("Excluded (no parse)", std::to_string(r.excluded));
  row("Average sentence length", fixed(r.mean_length, 2) + " words (" +
                                     std::to_string(r.min_length) + "-" +
                                     std::to_string(r.max_length) + " words)");
  if (r.mean_seconds) row("Average processing time", fixed(*r.mean_seconds, 2) + " sec");
  if (r.mean_edges) row("Average number of edges", fixed(*r.mean_edges, 2));
  row("Accuracy (%)", fixed(r.accuracy, 1));
  row("Per-sentence accuracy (%)", fixed(r.mean_sentence_accuracy, 1));
  row("no-crossing sentences", fixed(r.no_crossing, 2) + "%");
  row("% of <= 1-crossing sentences", fixed(r.at_most_one_crossing, 2) + "%");
  row("% of <= 2-crossing sentences", fixed(r.at_most_two_crossings, 2) + "%");
}

void write_report_keyvalue(std::ostream& os, const Report& r) {
  os << "sentences=" << r.sentences << '\n'
     << "excluded=" << r.excluded << '\n'
     << "constituents=" << r.constituents << '\n'
     << "non_crossing_constituents=" << r.non_crossing_constituents << '\n'
     << "accuracy=" << fixed(r.accuracy, 4) << '\n'
     << "mean_sentence_accuracy=" << fixed(r.mean_sentence_accuracy, 4) << '\n'
     << "no_crossing=" << fixed(r.no_crossing, 4) << '\n'
     << "le1_crossing=" << fixed(r.at_most_one_crossing, 4) << '\n'
     << "le2_crossing=" << fixed(r.at_most_two_crossings, 4) << '\n'
     << "mean_length=" << fixed(r.mean_length, 4) << '\n';
  if (r.mean_edges) os << "mean_edges=" << fixed(*r.mean_edges, 4) << '\n';
  if (r.mean_seconds) os << "mean_seconds=" << fixed(*r.mean_seconds, 6) << '\n';
}

}  // namespace robparse

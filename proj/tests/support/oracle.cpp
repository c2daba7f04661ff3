#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace robparse::testing {

namespace {

// Delimited spans (a, b), written out independently of the engine.
std::vector<std::pair<std::size_t, std::size_t>> delimiter_pairs(
    const Grammar& g, const std::vector<SymbolId>& tok) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& d : g.pair_delimiters()) {
    for (std::size_t a = 0; a < tok.size(); ++a) {
      if (tok[a] != d.open) continue;
      if (d.open == d.close) {
        for (std::size_t b = a + 1; b < tok.size(); ++b)
          if (tok[b] == d.close) {
            out.emplace(a, b);
            break;
          }
      } else {
        int depth = 0;
        for (std::size_t b = a; b < tok.size(); ++b) {
          if (tok[b] == d.open) ++depth;
          if (tok[b] == d.close && --depth == 0) {
            out.emplace(a, b);
            break;
          }
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

Cost span_table_min_error(const Grammar& g, const std::vector<std::string>& tags,
                          const CostParams& params) {
  const std::size_t n = tags.size();
  const std::size_t P = g.rules().size();
  const std::size_t S = g.symbols().size();
  const Cost INF = Cost::infinity();
  std::vector<SymbolId> tok;
  for (const auto& t : tags) tok.push_back(g.terminal_id(t));
  const auto pairs = delimiter_pairs(g, tok);

  std::size_t max_dots = 0;
  for (const auto& r : g.rules()) max_dots = std::max(max_dots, r.rhs.size() + 1);
  const std::size_t W = n + 1;
  std::vector<Cost> item(P * max_dots * W * W, INF);
  std::vector<Cost> phrase(S * W * W, INF);
  auto I = [&](std::size_t p, std::size_t d, std::size_t a, std::size_t b) -> Cost& {
    return item[((p * max_dots + d) * W + a) * W + b];
  };
  auto N = [&](SymbolId s, std::size_t a, std::size_t b) -> Cost& {
    return phrase[(s.value * W + a) * W + b];
  };
  auto add = [&](Cost x, Cost y) { return (x == INF || y == INF) ? INF : x + y; };
  auto misused = [&](SymbolId s) { return s != kUnknownSymbol && g.is_misused(s); };

  std::vector<SymbolId> nts = g.nonterminals();
  HypothesisContext delimited_ctx;
  delimited_ctx.delimited = true;
  const Cost skip_cost =
      phrase_cost(PhraseError::Insertion, delimited_ctx, Cost::zero(), params);
  const Cost pdel_cost = phrase_cost(PhraseError::Deletion, {}, Cost::zero(), params);

  for (std::size_t len = 0; len <= n; ++len) {
    for (std::size_t a = 0; a + len <= n; ++a) {
      const std::size_t b = a + len;
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t p = 0; p < P; ++p) {
          const Rule& rule = g.rule(p);
          const bool fid = g.is_fiducial(rule.lhs);
          for (std::size_t d = 0; d <= rule.rhs.size(); ++d) {
            Cost best = I(p, d, a, b);
            auto offer = [&](Cost c) {
              if (c < best) best = c;
            };
            if (d == 0 && len == 0) offer(Cost::zero());
            if (len > 0) {
              HypothesisContext ctx{fid, misused(tok[b - 1]), false};
              offer(add(I(p, d, a, b - 1),
                        terminal_cost(TerminalError::Insertion, ctx, params)));
              for (std::size_t i = a; i < b; ++i) {
                HypothesisContext pctx;
                pctx.delimited = false;
                for (const auto& dp : g.pair_delimiters())
                  if (b - i >= 2 && tok[i] == dp.open && tok[b - 1] == dp.close)
                    pctx.delimited = true;
                Cost ins = phrase_cost(PhraseError::Insertion, pctx, Cost::zero(), params);
                for (SymbolId B : nts)
                  offer(add(add(I(p, d, a, i), ins), N(B, i, b)));
              }
              for (const auto& [x, y] : pairs)
                if (y + 1 == b && x >= a) offer(add(I(p, d, a, x), skip_cost));
            }
            if (d > 0) {
              const SymbolId c = rule.rhs[d - 1];
              if (g.is_terminal(c)) {
                if (len > 0) {
                  const SymbolId t = tok[b - 1];
                  if (t == c) {
                    offer(I(p, d - 1, a, b - 1));
                  } else {
                    HypothesisContext ctx{fid, misused(c) || misused(t), false};
                    offer(add(I(p, d - 1, a, b - 1),
                              terminal_cost(TerminalError::Mutation, ctx, params)));
                  }
                }
                HypothesisContext ctx{fid, misused(c), false};
                offer(add(I(p, d - 1, a, b),
                          terminal_cost(TerminalError::Deletion, ctx, params)));
              } else {
                for (std::size_t i = a; i <= b; ++i) offer(add(I(p, d - 1, a, i), N(c, i, b)));
                offer(add(I(p, d - 1, a, b), pdel_cost));
              }
            }
            if (best < I(p, d, a, b)) {
              I(p, d, a, b) = best;
              changed = true;
            }
          }
        }
        for (std::size_t p = 0; p < P; ++p) {
          const Rule& rule = g.rule(p);
          Cost v = I(p, rule.rhs.size(), a, b);
          if (v < N(rule.lhs, a, b)) {
            N(rule.lhs, a, b) = v;
            changed = true;
          }
        }
      }
    }
  }
  return N(g.start(), 0, n);
}

std::vector<std::vector<std::string>> enumerate_language(const Grammar& g,
                                                         std::size_t max_length) {
  // Breadth-first over sentential forms; every rule is non-empty, so a form
  // never gets shorter than its terminal count.
  std::set<std::vector<SymbolId>> seen;
  std::set<std::vector<std::string>> sentences;
  std::deque<std::vector<SymbolId>> queue;
  queue.push_back({g.start()});
  seen.insert(queue.front());
  while (!queue.empty()) {
    auto form = queue.front();
    queue.pop_front();
    auto nt = std::find_if(form.begin(), form.end(),
                           [&](SymbolId s) { return !g.is_terminal(s); });
    if (nt == form.end()) {
      std::vector<std::string> words;
      for (auto s : form) words.push_back(g.symbol(s).name);
      sentences.insert(words);
      continue;
    }
    const std::size_t at = static_cast<std::size_t>(nt - form.begin());
    for (std::size_t r : g.rules_for(*nt)) {
      std::vector<SymbolId> next(form.begin(), form.begin() + at);
      next.insert(next.end(), g.rule(r).rhs.begin(), g.rule(r).rhs.end());
      next.insert(next.end(), form.begin() + at + 1, form.end());
      if (next.size() > max_length) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {sentences.begin(), sentences.end()};
}

std::size_t language_edit_distance(const Grammar& g, const std::vector<std::string>& tags,
                                   std::size_t max_length) {
  std::size_t best = static_cast<std::size_t>(-1);
  for (const auto& w : enumerate_language(g, max_length)) {
    std::vector<std::size_t> prev(tags.size() + 1), cur(tags.size() + 1);
    for (std::size_t j = 0; j <= tags.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= w.size(); ++i) {
      cur[0] = i;
      for (std::size_t j = 1; j <= tags.size(); ++j)
        cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1,
                           prev[j - 1] + (w[i - 1] == tags[j - 1] ? 0 : 1)});
      std::swap(prev, cur);
    }
    best = std::min(best, prev[tags.size()]);
  }
  return best;
}

std::size_t brute_force_crossings(const std::vector<Bracket>& candidate,
                                  const std::vector<Bracket>& gold) {
  std::size_t count = 0;
  for (const auto& c : candidate) {
    bool crossed = false;
    for (const auto& g : gold) {
      if ((c.start < g.start && g.start < c.end && c.end < g.end) ||
          (g.start < c.start && c.start < g.end && g.end < c.end))
        crossed = true;
    }
    if (crossed) ++count;
  }
  return count;
}

}  // namespace robparse::testing

#ifndef ROBPARSE_GRAMMAR_HPP
#define ROBPARSE_GRAMMAR_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "robparse/symbol.hpp"
#include "robparse/tree.hpp"

namespace robparse {

/// Production number as it appears in grammar files and chart dumps.
struct RuleId {
  std::uint32_t value = 0;
  auto operator<=>(const RuleId&) const = default;
};

struct Rule {
  RuleId id;
  SymbolId lhs;
  std::vector<SymbolId> rhs;  // never empty
  std::uint64_t frequency = 1;
};

struct DelimiterPair {
  SymbolId open;
  SymbolId close;
};

struct Diagnostic {
  enum class Severity { Warning, Error };
  Severity severity = Severity::Warning;
  std::string message;
};

/// A context-free grammar over POS tags plus the symbol sets the heuristic
/// cost model consults.
///
/// Rules are addressed two ways: by RuleId (stable across pruning) and by
/// index into rules() (dense, used by the chart).
class Grammar {
 public:
  Grammar() = default;

  /// Adds a rule; lhs must be a nonterminal and rhs non-empty. When id is
  /// absent the next free id is used.
  RuleId add_rule(const Symbol& lhs, const std::vector<Symbol>& rhs,
                  std::uint64_t frequency = 1, std::optional<RuleId> id = {});

  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(std::size_t index) const { return rules_[index]; }
  const SymbolTable& symbols() const { return symbols_; }
  const Symbol& symbol(SymbolId id) const { return symbols_[id]; }
  bool is_terminal(SymbolId id) const { return symbols_[id].is_terminal(); }

  SymbolId start() const { return start_; }
  void set_start(const std::string& label);

  /// Rule indices whose lhs is the given nonterminal.
  const std::vector<std::size_t>& rules_for(SymbolId lhs) const;

  /// Input tag -> symbol id, kUnknownSymbol when not a known terminal.
  SymbolId terminal_id(std::string_view tag) const;

  // Heuristic symbol sets. Names are interned even if no rule uses them.
  void set_fiducials(const std::vector<std::string>& labels);
  void set_misused_terminals(const std::vector<std::string>& tags);
  void set_pair_delimiters(
      const std::vector<std::pair<std::string, std::string>>& pairs);

  bool is_fiducial(SymbolId id) const;
  bool is_misused(SymbolId id) const;
  const std::vector<SymbolId>& fiducials() const { return fiducials_; }
  const std::vector<SymbolId>& misused_terminals() const { return misused_; }
  const std::vector<DelimiterPair>& pair_delimiters() const {
    return delimiters_;
  }

  /// Nonterminals that appear as some rule's lhs.
  std::vector<SymbolId> nonterminals() const;
  bool uses_symbol(SymbolId id) const;

  std::string describe(const Rule& rule) const;

 private:
  void reindex();
  std::vector<bool> flag_set(const std::vector<SymbolId>& ids) const;

  SymbolTable symbols_;
  std::vector<Rule> rules_;
  std::vector<std::vector<std::size_t>> by_lhs_;
  SymbolId start_{};
  bool has_start_ = false;
  std::uint32_t next_id_ = 1;
  std::vector<SymbolId> fiducials_;
  std::vector<SymbolId> misused_;
  std::vector<DelimiterPair> delimiters_;
};

/// Default heuristic sets: fiducial {NP}, misused punctuation, conjunctions
/// and particles, delimiters comma..comma and lparen..rparen.
std::vector<std::string> default_fiducials();
std::vector<std::string> default_misused_terminals();
std::vector<std::pair<std::string, std::string>> default_pair_delimiters();
void apply_default_heuristic_sets(Grammar& grammar);

/// Reads one rule per internal node of every tree (tags as terminals, words
/// discarded) and counts occurrences. The start symbol is the most frequent
/// root label; ties go to the label seen first.
Grammar induce_grammar(const std::vector<Tree>& trees);

/// Keeps exactly the rules whose frequency is >= the arithmetic mean of
/// per-rule frequencies. Rule ids survive.
Grammar prune_by_average_frequency(const Grammar& grammar);

/// Mean of per-rule frequencies (0 for an empty grammar).
double mean_rule_frequency(const Grammar& grammar);

std::vector<Diagnostic> validate_grammar(const Grammar& grammar);

// Text format: "<freq>\t<LHS> -> <sym> <sym> ...", '#' comments, an
// optional "# start: LABEL" directive.
void write_grammar(std::ostream& os, const Grammar& grammar);
Grammar read_grammar(std::istream& is);
Grammar read_grammar_text(std::string_view text);

}  // namespace robparse

#endif  // ROBPARSE_GRAMMAR_HPP

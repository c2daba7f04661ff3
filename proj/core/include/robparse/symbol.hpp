#ifndef ROBPARSE_SYMBOL_HPP
#define ROBPARSE_SYMBOL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace robparse {

enum class SymbolKind : std::uint8_t { Terminal, Nonterminal };

/// A POS tag (terminal) or a phrase label (nonterminal).
struct Symbol {
  SymbolKind kind = SymbolKind::Terminal;
  std::string name;

  static Symbol terminal(std::string name);
  static Symbol nonterminal(std::string name);

  bool is_terminal() const { return kind == SymbolKind::Terminal; }
  auto operator<=>(const Symbol&) const = default;
};

/// Non-empty, no whitespace, no brackets, no '/'.
bool is_valid_symbol_name(std::string_view name);

/// Lowercases a POS tag and maps Penn punctuation tags to names
/// ("," -> comma, "(" / "-LRB-" -> lparen, ...).
std::string normalize_tag(std::string_view tag);

/// Uppercases a phrase label.
std::string normalize_label(std::string_view label);

/// Dense index into a SymbolTable.
struct SymbolId {
  std::uint32_t value = 0;
  auto operator<=>(const SymbolId&) const = default;
};

/// Sentinel for input tags the grammar has never seen.
inline constexpr SymbolId kUnknownSymbol{0xffffffffu};

class SymbolTable {
 public:
  SymbolId intern(const Symbol& symbol);
  std::optional<SymbolId> find(const Symbol& symbol) const;
  /// Looks up a terminal by name.
  std::optional<SymbolId> find_terminal(std::string_view name) const;
  const Symbol& operator[](SymbolId id) const { return symbols_[id.value]; }
  std::size_t size() const { return symbols_.size(); }

 private:
  static std::string key_of(const Symbol& symbol);
  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace robparse

#endif  // ROBPARSE_SYMBOL_HPP

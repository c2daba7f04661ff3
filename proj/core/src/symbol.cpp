#include "robparse/symbol.hpp"

#include <algorithm>
#include <cctype>

namespace robparse {

Symbol Symbol::terminal(std::string name) {
  return Symbol{SymbolKind::Terminal, std::move(name)};
}

Symbol Symbol::nonterminal(std::string name) {
  return Symbol{SymbolKind::Nonterminal, std::move(name)};
}

bool is_valid_symbol_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
           c == '[' || c == ']' || c == '/';
  });
}

std::string normalize_tag(std::string_view tag) {
  struct Alias {
    std::string_view penn;
    std::string_view name;
  };
  static constexpr Alias kAliases[] = {
      {",", "comma"},     {".", "period"},   {":", "colon"},
      {"(", "lparen"},    {")", "rparen"},   {"-LRB-", "lparen"},
      {"-RRB-", "rparen"}, {"-LCB-", "lparen"}, {"-RCB-", "rparen"},
      {"``", "lquote"},   {"''", "rquote"},  {"$", "dollar"},
      {"#", "pound"},
  };
  for (const auto& a : kAliases)
    if (tag == a.penn) return std::string(a.name);
  std::string out(tag);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string normalize_label(std::string_view label) {
  std::string out(label);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::toupper(c));
  });
  return out;
}

std::string SymbolTable::key_of(const Symbol& symbol) {
  return (symbol.is_terminal() ? "t:" : "n:") + symbol.name;
}

SymbolId SymbolTable::intern(const Symbol& symbol) {
  auto [it, inserted] = index_.try_emplace(
      key_of(symbol), static_cast<std::uint32_t>(symbols_.size()));
  if (inserted) symbols_.push_back(symbol);
  return SymbolId{it->second};
}

std::optional<SymbolId> SymbolTable::find(const Symbol& symbol) const {
  auto it = index_.find(key_of(symbol));
  if (it == index_.end()) return std::nullopt;
  return SymbolId{it->second};
}

std::optional<SymbolId> SymbolTable::find_terminal(std::string_view name) const {
  auto it = index_.find("t:" + std::string(name));
  if (it == index_.end()) return std::nullopt;
  return SymbolId{it->second};
}

}  // namespace robparse

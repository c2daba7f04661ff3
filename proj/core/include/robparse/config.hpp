#ifndef ROBPARSE_CONFIG_HPP
#define ROBPARSE_CONFIG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "robparse/cost_model.hpp"
#include "robparse/grammar.hpp"

namespace robparse {

/// Flat `key = value` experiment configuration.
struct Config {
  CostParams params;
  std::vector<std::string> fiducials = default_fiducials();
  std::vector<std::string> misused_terminals = default_misused_terminals();
  std::vector<std::pair<std::string, std::string>> pair_delimiters =
      default_pair_delimiters();
  std::optional<std::string> start_symbol;
  std::optional<Cost> budget;

  /// Installs the heuristic sets and start symbol into the grammar.
  void apply_to(Grammar& grammar) const;
};

/// Unknown keys, malformed values and duplicate keys raise robparse::Error
/// naming the line. Lists are comma or space separated; delimiter pairs are
/// written open:close.
Config parse_config(std::string_view text);

/// The shipped defaults as config text.
std::string default_config_text();

}  // namespace robparse

#endif  // ROBPARSE_CONFIG_HPP

#include "robparse/config.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "robparse/error.hpp"

namespace robparse {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  for (char c : value) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!item.empty()) out.push_back(std::move(item));
      item.clear();
    } else {
      item += c;
    }
  }
  if (!item.empty()) out.push_back(std::move(item));
  return out;
}

}  // namespace

void Config::apply_to(Grammar& grammar) const {
  grammar.set_fiducials(fiducials);
  grammar.set_misused_terminals(misused_terminals);
  grammar.set_pair_delimiters(pair_delimiters);
  if (start_symbol) grammar.set_start(*start_symbol);
}

Config parse_config(std::string_view text) {
  Config cfg;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    // '#' starts a comment anywhere; no key or value contains one.
    std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) { return SyntaxError(msg, line_no); };
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw fail("expected 'key = value'");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (!seen.insert(key).second) throw fail("duplicate key '" + key + "'");

    auto cost = [&] {
      try {
        return Cost::parse(value);
      } catch (const Error& e) {
        throw fail(key + ": " + e.what());
      }
    };
    auto& p = cfg.params;
    if (key == "alpha_insertion") p.alpha_insertion = cost();
    else if (key == "alpha_deletion") p.alpha_deletion = cost();
    else if (key == "alpha_mutation") p.alpha_mutation = cost();
    else if (key == "beta_insertion") p.beta_insertion = cost();
    else if (key == "beta_deletion") p.beta_deletion = cost();
    else if (key == "beta_mutation") p.beta_mutation = cost();
    else if (key == "delta1") p.delta1 = cost();
    else if (key == "delta2") p.delta2 = cost();
    else if (key == "delta3") p.delta3 = cost();
    else if (key == "budget") cfg.budget = cost();
    else if (key == "start_symbol") {
      if (!is_valid_symbol_name(value)) throw fail("invalid start symbol");
      cfg.start_symbol = value;
    } else if (key == "fiducials") {
      cfg.fiducials = split_list(value);
    } else if (key == "misused_terminals") {
      cfg.misused_terminals = split_list(value);
    } else if (key == "pair_delimiters") {
      cfg.pair_delimiters.clear();
      for (const auto& item : split_list(value)) {
        std::size_t colon = item.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == item.size())
          throw fail("delimiter pair '" + item + "' is not open:close");
        cfg.pair_delimiters.emplace_back(item.substr(0, colon), item.substr(colon + 1));
      }
    } else {
      throw fail("unknown key '" + key + "'");
    }
  }
  return cfg;
}

std::string default_config_text() {
  const CostParams p;
  std::ostringstream os;
  os << "alpha_insertion = " << p.alpha_insertion << '\n'
     << "alpha_deletion = " << p.alpha_deletion << '\n'
     << "alpha_mutation = " << p.alpha_mutation << '\n'
     << "beta_insertion = " << p.beta_insertion << '\n'
     << "beta_deletion = " << p.beta_deletion << '\n'
     << "delta1 = " << p.delta1 << '\n'
     << "delta2 = " << p.delta2 << '\n'
     << "delta3 = " << p.delta3 << '\n'
     << "fiducials = NP\n"
     << "misused_terminals = comma, period, colon, lparen, rparen, cc, rp\n"
     << "pair_delimiters = comma:comma, lparen:rparen\n";
  return os.str();
}

}  // namespace robparse

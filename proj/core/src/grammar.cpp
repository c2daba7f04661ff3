#include "robparse/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "robparse/error.hpp"

namespace robparse {

RuleId Grammar::add_rule(const Symbol& lhs, const std::vector<Symbol>& rhs,
                         std::uint64_t frequency, std::optional<RuleId> id) {
  if (lhs.is_terminal())
    throw Error("rule lhs '" + lhs.name + "' must be a nonterminal");
  if (rhs.empty()) throw Error("rule for '" + lhs.name + "' has an empty rhs");
  if (frequency == 0) throw Error("rule frequency must be at least 1");
  if (!is_valid_symbol_name(lhs.name))
    throw Error("invalid symbol name '" + lhs.name + "'");
  for (const auto& s : rhs)
    if (!is_valid_symbol_name(s.name))
      throw Error("invalid symbol name '" + s.name + "'");

  RuleId rid = id.value_or(RuleId{next_id_});
  for (const auto& r : rules_)
    if (r.id == rid)
      throw Error("duplicate rule id " + std::to_string(rid.value));
  next_id_ = std::max(next_id_, rid.value + 1);

  Rule rule;
  rule.id = rid;
  rule.lhs = symbols_.intern(lhs);
  for (const auto& s : rhs) rule.rhs.push_back(symbols_.intern(s));
  rule.frequency = frequency;
  if (!has_start_) {
    start_ = rule.lhs;
    has_start_ = true;
  }
  rules_.push_back(std::move(rule));
  reindex();
  return rid;
}

void Grammar::reindex() {
  by_lhs_.assign(symbols_.size(), {});
  for (std::size_t i = 0; i < rules_.size(); ++i)
    by_lhs_[rules_[i].lhs.value].push_back(i);
}

const std::vector<std::size_t>& Grammar::rules_for(SymbolId lhs) const {
  static const std::vector<std::size_t> kNone;
  if (lhs.value >= by_lhs_.size()) return kNone;
  return by_lhs_[lhs.value];
}

void Grammar::set_start(const std::string& label) {
  start_ = symbols_.intern(Symbol::nonterminal(label));
  has_start_ = true;
  reindex();
}

SymbolId Grammar::terminal_id(std::string_view tag) const {
  return symbols_.find_terminal(tag).value_or(kUnknownSymbol);
}

void Grammar::set_fiducials(const std::vector<std::string>& labels) {
  fiducials_.clear();
  for (const auto& l : labels)
    fiducials_.push_back(symbols_.intern(Symbol::nonterminal(l)));
  reindex();
}

void Grammar::set_misused_terminals(const std::vector<std::string>& tags) {
  misused_.clear();
  for (const auto& t : tags)
    misused_.push_back(symbols_.intern(Symbol::terminal(t)));
  reindex();
}

void Grammar::set_pair_delimiters(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  delimiters_.clear();
  for (const auto& [open, close] : pairs)
    delimiters_.push_back({symbols_.intern(Symbol::terminal(open)),
                           symbols_.intern(Symbol::terminal(close))});
  reindex();
}

bool Grammar::is_fiducial(SymbolId id) const {
  return std::find(fiducials_.begin(), fiducials_.end(), id) != fiducials_.end();
}

bool Grammar::is_misused(SymbolId id) const {
  return std::find(misused_.begin(), misused_.end(), id) != misused_.end();
}

std::vector<SymbolId> Grammar::nonterminals() const {
  std::vector<SymbolId> out;
  for (std::uint32_t i = 0; i < by_lhs_.size(); ++i)
    if (!by_lhs_[i].empty()) out.push_back(SymbolId{i});
  return out;
}

bool Grammar::uses_symbol(SymbolId id) const {
  return std::any_of(rules_.begin(), rules_.end(), [&](const Rule& r) {
    return r.lhs == id ||
           std::find(r.rhs.begin(), r.rhs.end(), id) != r.rhs.end();
  });
}

std::string Grammar::describe(const Rule& rule) const {
  std::string out = symbol(rule.lhs).name + " ->";
  for (auto s : rule.rhs) out += " " + symbol(s).name;
  return out;
}

std::vector<std::string> default_fiducials() { return {"NP"}; }

std::vector<std::string> default_misused_terminals() {
  return {"comma", "period", "colon", "lparen", "rparen", "cc", "rp"};
}

std::vector<std::pair<std::string, std::string>> default_pair_delimiters() {
  return {{"comma", "comma"}, {"lparen", "rparen"}};
}

void apply_default_heuristic_sets(Grammar& grammar) {
  grammar.set_fiducials(default_fiducials());
  grammar.set_misused_terminals(default_misused_terminals());
  grammar.set_pair_delimiters(default_pair_delimiters());
}

// ---------------------------------------------------------------------------
// Induction

namespace {

struct RuleShape {
  std::string lhs;
  std::vector<Symbol> rhs;
  auto operator<=>(const RuleShape&) const = default;
};

void collect_rules(const Tree& node, std::map<RuleShape, std::uint64_t>& counts,
                   std::vector<RuleShape>& order) {
  if (node.is_leaf()) return;
  RuleShape shape;
  shape.lhs = node.label;
  for (const auto& child : node.children) {
    if (child.is_leaf())
      shape.rhs.push_back(Symbol::terminal(child.label));
    else
      shape.rhs.push_back(Symbol::nonterminal(child.label));
  }
  if (shape.rhs.empty()) return;
  auto [it, inserted] = counts.try_emplace(shape, 0);
  if (inserted) order.push_back(shape);
  ++it->second;
  for (const auto& child : node.children) collect_rules(child, counts, order);
}

void check_well_formed(const Tree& node, std::size_t index) {
  if (node.is_leaf()) {
    if (node.label.empty())
      throw Error("tree " + std::to_string(index) + ": leaf without a tag");
    return;
  }
  if (node.label.empty())
    throw Error("tree " + std::to_string(index) + ": unlabeled internal node");
  if (node.children.empty())
    throw Error("tree " + std::to_string(index) + ": empty node '" +
                node.label + "'");
  for (const auto& c : node.children) check_well_formed(c, index);
}

}  // namespace

Grammar induce_grammar(const std::vector<Tree>& trees) {
  if (trees.empty()) throw Error("no trees");
  std::map<RuleShape, std::uint64_t> counts;
  std::vector<RuleShape> order;
  std::map<std::string, std::size_t> root_counts;
  std::vector<std::string> root_order;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const Tree& t = trees[i];
    if (t.is_leaf())
      throw Error("tree " + std::to_string(i + 1) + ": root is a bare leaf");
    check_well_formed(t, i + 1);
    collect_rules(t, counts, order);
    if (root_counts[t.label]++ == 0) root_order.push_back(t.label);
  }

  Grammar g;
  for (const auto& shape : order)
    g.add_rule(Symbol::nonterminal(shape.lhs), shape.rhs, counts.at(shape));

  std::string start = root_order.front();
  for (const auto& label : root_order)
    if (root_counts[label] > root_counts[start]) start = label;
  g.set_start(start);
  apply_default_heuristic_sets(g);
  return g;
}

double mean_rule_frequency(const Grammar& grammar) {
  const auto& rules = grammar.rules();
  if (rules.empty()) return 0.0;
  long double total = 0;
  for (const auto& r : rules) total += static_cast<long double>(r.frequency);
  return static_cast<double>(total / rules.size());
}

Grammar prune_by_average_frequency(const Grammar& grammar) {
  const auto& rules = grammar.rules();
  if (rules.empty()) throw Error("cannot prune an empty grammar");
  // frequency >= total / count  <=>  frequency * count >= total, in integers.
  std::uint64_t total = 0;
  for (const auto& r : rules) total += r.frequency;
  const std::uint64_t count = rules.size();

  Grammar out;
  for (const auto& r : rules) {
    if (r.frequency * count < total) continue;
    std::vector<Symbol> rhs;
    for (auto s : r.rhs) rhs.push_back(grammar.symbol(s));
    out.add_rule(grammar.symbol(r.lhs), rhs, r.frequency, r.id);
  }
  out.set_start(grammar.symbol(grammar.start()).name);
  std::vector<std::string> names;
  for (auto id : grammar.fiducials()) names.push_back(grammar.symbol(id).name);
  out.set_fiducials(names);
  names.clear();
  for (auto id : grammar.misused_terminals())
    names.push_back(grammar.symbol(id).name);
  out.set_misused_terminals(names);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& d : grammar.pair_delimiters())
    pairs.emplace_back(grammar.symbol(d.open).name, grammar.symbol(d.close).name);
  out.set_pair_delimiters(pairs);
  return out;
}

std::vector<Diagnostic> validate_grammar(const Grammar& g) {
  std::vector<Diagnostic> out;
  auto warn = [&](std::string msg) {
    out.push_back({Diagnostic::Severity::Warning, std::move(msg)});
  };
  auto error = [&](std::string msg) {
    out.push_back({Diagnostic::Severity::Error, std::move(msg)});
  };

  if (g.rules().empty()) {
    error("grammar has no rules");
    return out;
  }
  if (g.rules_for(g.start()).empty())
    error("start symbol " + g.symbol(g.start()).name + " has no expansion");

  std::set<SymbolId> missing;
  for (const auto& r : g.rules())
    for (auto s : r.rhs)
      if (!g.is_terminal(s) && g.rules_for(s).empty()) missing.insert(s);
  for (auto s : missing) error(g.symbol(s).name + " has no expansion");

  // Reachability from the start symbol.
  std::vector<bool> reached(g.symbols().size(), false);
  std::vector<SymbolId> stack{g.start()};
  reached[g.start().value] = true;
  while (!stack.empty()) {
    SymbolId s = stack.back();
    stack.pop_back();
    for (auto ri : g.rules_for(s))
      for (auto c : g.rule(ri).rhs)
        if (!reached[c.value]) {
          reached[c.value] = true;
          stack.push_back(c);
        }
  }
  for (auto nt : g.nonterminals())
    if (!reached[nt.value]) warn(g.symbol(nt).name + " is unreachable from " +
                                 g.symbol(g.start()).name);

  for (auto f : g.fiducials())
    if (g.rules_for(f).empty())
      warn("fiducial " + g.symbol(f).name + " is not a nonterminal of the grammar");
  for (auto m : g.misused_terminals())
    if (!g.uses_symbol(m))
      warn("misused terminal " + g.symbol(m).name + " does not occur in the grammar");
  return out;
}

// ---------------------------------------------------------------------------
// Text format

void write_grammar(std::ostream& os, const Grammar& g) {
  os << "# start: " << g.symbol(g.start()).name << '\n';
  for (const auto& r : g.rules()) {
    os << r.frequency << '\t' << g.symbol(r.lhs).name << " ->";
    for (auto s : r.rhs) os << ' ' << g.symbol(s).name;
    os << '\n';
  }
}

namespace {

bool looks_nonterminal(const std::string& name) {
  bool upper = false;
  for (unsigned char c : name) {
    if (std::islower(c)) return false;
    if (std::isupper(c)) upper = true;
  }
  return upper;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Grammar read_grammar_text(std::string_view text) {
  struct Line {
    std::size_t number;
    std::uint64_t freq;
    std::string lhs;
    std::vector<std::string> rhs;
  };
  std::vector<Line> lines;
  std::optional<std::string> start;
  std::set<std::string> lhs_names;

  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos
                                                ? std::string_view::npos
                                                : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++number;
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string body = trim(std::string_view(line).substr(1));
      if (body.rfind("start:", 0) == 0) start = trim(body.substr(6));
      continue;
    }
    std::istringstream in(line);
    std::string freq_text, lhs, arrow;
    if (!(in >> freq_text >> lhs >> arrow) || arrow != "->")
      throw SyntaxError("expected '<freq>\\t<LHS> -> <sym> ...'", number);
    Line l;
    l.number = number;
    try {
      std::size_t used = 0;
      l.freq = std::stoull(freq_text, &used);
      if (used != freq_text.size()) throw Error("");
    } catch (const std::exception&) {
      throw SyntaxError("bad frequency '" + freq_text + "'", number);
    }
    l.lhs = lhs;
    for (std::string sym; in >> sym;) l.rhs.push_back(sym);
    if (l.rhs.empty()) throw SyntaxError("empty right-hand side", number);
    lhs_names.insert(lhs);
    lines.push_back(std::move(l));
  }

  Grammar g;
  for (const auto& l : lines) {
    std::vector<Symbol> rhs;
    for (const auto& s : l.rhs)
      rhs.push_back(lhs_names.count(s) || looks_nonterminal(s)
                        ? Symbol::nonterminal(s)
                        : Symbol::terminal(s));
    try {
      g.add_rule(Symbol::nonterminal(l.lhs), rhs, l.freq);
    } catch (const Error& e) {
      throw SyntaxError(e.what(), l.number);
    }
  }
  if (start) g.set_start(*start);
  apply_default_heuristic_sets(g);
  return g;
}

Grammar read_grammar(std::istream& is) {
  std::ostringstream buf;
  buf << is.rdbuf();
  return read_grammar_text(buf.str());
}

}  // namespace robparse

#include "robparse/treebank.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "robparse/error.hpp"
#include "robparse/symbol.hpp"

namespace robparse {

namespace {

constexpr std::array<std::string_view, 5> kMarkerNames = {"INS", "DEL", "MUT",
                                                         "PINS", "PDEL"};

const char* kArrow = "\xe2\x86\x92";  // U+2192

bool ends_with_marker_head(std::string_view atom) {
  for (auto name : kMarkerNames) {
    if (atom.size() > name.size() &&
        atom.substr(atom.size() - name.size()) == name &&
        atom[atom.size() - name.size() - 1] == '*')
      return true;
  }
  return false;
}

struct Token {
  enum class Kind { Open, Close, Atom, End } kind;
  std::string text;
  std::size_t line;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next(int depth) {
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) return {Token::Kind::End, "", line_};
      if (depth == 0 && text_[pos_] == '#' && at_line_start()) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      return {Token::Kind::Open, "(", line_};
    }
    if (c == ')') {
      ++pos_;
      return {Token::Kind::Close, ")", line_};
    }
    std::size_t line = line_;
    std::string atom;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == ')') break;
      if (d == '(') {
        if (!ends_with_marker_head(atom)) break;
        std::size_t close = text_.find(')', pos_);
        if (close == std::string_view::npos) break;
        atom.append(text_.substr(pos_, close - pos_ + 1));
        pos_ = close + 1;
        continue;
      }
      atom += d;
      ++pos_;
    }
    return {Token::Kind::Atom, atom, line};
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }
  bool at_line_start() const {
    std::size_t p = pos_;
    while (p > 0 && (text_[p - 1] == ' ' || text_[p - 1] == '\t')) --p;
    return p == 0 || text_[p - 1] == '\n';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

std::string at_line(std::size_t line) { return " at line " + std::to_string(line); }

/// Splits "text*KIND(args)" into text and a parsed hypothesis.
std::pair<std::string, std::optional<Hypothesis>> split_marker(
    const std::string& atom, std::size_t line) {
  if (atom.empty() || atom.back() != ')') return {atom, std::nullopt};
  for (std::size_t star = atom.rfind('*'); star != std::string::npos;
       star = star == 0 ? std::string::npos : atom.rfind('*', star - 1)) {
    std::size_t paren = atom.find('(', star);
    if (paren == std::string::npos) continue;
    std::string name = atom.substr(star + 1, paren - star - 1);
    if (std::find(kMarkerNames.begin(), kMarkerNames.end(), name) ==
        kMarkerNames.end())
      continue;
    std::string args = atom.substr(paren + 1, atom.size() - paren - 2);
    Hypothesis h;
    auto bad = [&] {
      return SyntaxError("malformed hypothesis marker '" + atom.substr(star) + "'",
                         line);
    };
    std::size_t comma = args.rfind(',');
    try {
      if (name == "INS" || name == "DEL") {
        h.kind = name == "INS" ? Hypothesis::Kind::Insertion
                               : Hypothesis::Kind::Deletion;
        h.cost = Cost::parse(args);
      } else {
        if (comma == std::string::npos) throw bad();
        h.cost = Cost::parse(args.substr(comma + 1));
        std::string head = args.substr(0, comma);
        if (name == "MUT") {
          h.kind = Hypothesis::Kind::Mutation;
          std::size_t arrow = head.find(kArrow);
          if (arrow == std::string::npos) throw bad();
          h.original = head.substr(0, arrow);
          h.replaced = head.substr(arrow + std::string_view(kArrow).size());
        } else {
          h.kind = name == "PINS" ? Hypothesis::Kind::PhraseInsertion
                                  : Hypothesis::Kind::PhraseDeletion;
          h.label = head;
        }
      }
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error&) {
      throw bad();
    }
    return {atom.substr(0, star), h};
  }
  return {atom, std::nullopt};
}

std::string clean_label(const std::string& raw) {
  std::string label = raw;
  if (!label.empty() && label.front() != '-') {
    std::size_t cut = label.find_first_of("-=");
    if (cut != std::string::npos && cut > 0) label.resize(cut);
  }
  return normalize_label(label);
}

class TreeReader {
 public:
  TreeReader(std::string_view text, std::vector<std::string>* warnings)
      : lex_(text), warnings_(warnings) {}

  std::vector<Tree> read_all() {
    std::vector<Tree> trees;
    for (;;) {
      Token t = lex_.next(0);
      if (t.kind == Token::Kind::End) break;
      if (t.kind != Token::Kind::Open)
        throw SyntaxError("expected '(' but found '" + t.text + "'", t.line);
      auto tree = read_node(t.line, true);
      if (!tree) throw SyntaxError("empty tree", t.line);
      trees.push_back(std::move(*tree));
    }
    return trees;
  }

 private:
  // Called after '('. Returns nullopt when every child was dropped.
  std::optional<Tree> read_node(std::size_t open_line, bool top) {
    ++depth_;
    Tree node;
    bool labeled = false;
    bool any_child = false;
    bool first = true;
    for (;;) {
      Token t = lex_.next(depth_);
      if (t.kind == Token::Kind::End)
        throw SyntaxError("unbalanced", open_line);
      if (t.kind == Token::Kind::Close) break;
      if (t.kind == Token::Kind::Open) {
        any_child = true;
        if (auto child = read_node(t.line, false))
          node.children.push_back(std::move(*child));
      } else if (first && t.text.find('/') == std::string::npos) {
        auto [label, hyp] = split_marker(t.text, t.line);
        node.label = clean_label(label);
        node.hypothesis = hyp;
        labeled = true;
      } else {
        any_child = true;
        if (auto leaf = read_leaf(t)) node.children.push_back(std::move(*leaf));
      }
      first = false;
    }
    --depth_;

    bool phrase_deletion = node.hypothesis &&
                           node.hypothesis->kind == Hypothesis::Kind::PhraseDeletion;
    if (!any_child && !phrase_deletion)
      throw SyntaxError("empty node", open_line);
    if (node.children.empty() && !phrase_deletion) return std::nullopt;
    if (!labeled) {
      if (!top) throw SyntaxError("unlabeled node", open_line);
      if (node.children.size() == 1 && !node.children.front().is_leaf())
        return std::move(node.children.front());
      node.label = "TOP";
    }
    if (!is_valid_symbol_name(node.label))
      throw SyntaxError("invalid label '" + node.label + "'", open_line);
    return node;
  }

  std::optional<Tree> read_leaf(const Token& t) {
    auto [body, hyp] = split_marker(t.text, t.line);
    std::size_t slash = body.rfind('/');
    if (slash == std::string::npos)
      throw SyntaxError("leaf '" + t.text + "' is not word/tag", t.line);
    std::string word = body.substr(0, slash);
    std::string raw_tag = body.substr(slash + 1);
    if (raw_tag == "-NONE-") {
      warn("dropped empty element '" + t.text + "'" + at_line(t.line));
      return std::nullopt;
    }
    if (word.empty() && !(hyp && hyp->kind == Hypothesis::Kind::Deletion)) {
      warn("dropped leaf with empty word '" + t.text + "'" + at_line(t.line));
      return std::nullopt;
    }
    std::string tag = normalize_tag(raw_tag);
    if (!is_valid_symbol_name(tag))
      throw SyntaxError("invalid tag '" + raw_tag + "'", t.line);
    Tree leaf = Tree::leaf(std::move(word), std::move(tag));
    leaf.hypothesis = hyp;
    return leaf;
  }

  void warn(std::string msg) {
    if (warnings_) warnings_->push_back(std::move(msg));
  }

  Lexer lex_;
  std::vector<std::string>* warnings_;
  int depth_ = 0;
};

std::string escape_word(const std::string& word) {
  std::string out;
  for (char c : word) {
    if (c == '(')
      out += "-LRB-";
    else if (c == ')')
      out += "-RRB-";
    else
      out += c;
  }
  return out;
}

std::string marker(const Hypothesis& h) {
  switch (h.kind) {
    case Hypothesis::Kind::Insertion:
      return "*INS(" + h.cost.str() + ")";
    case Hypothesis::Kind::Deletion:
      return "*DEL(" + h.cost.str() + ")";
    case Hypothesis::Kind::Mutation:
      return "*MUT(" + h.original + kArrow + h.replaced + "," + h.cost.str() + ")";
    case Hypothesis::Kind::PhraseInsertion:
      return "*PINS(" + h.label + "," + h.cost.str() + ")";
    case Hypothesis::Kind::PhraseDeletion:
      return "*PDEL(" + h.label + "," + h.cost.str() + ")";
  }
  return {};
}

void write_into(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out += escape_word(*t.word);
    out += '/';
    out += t.label;
    if (t.hypothesis) out += marker(*t.hypothesis);
    return;
  }
  out += '(';
  out += t.label;
  if (t.hypothesis) out += marker(*t.hypothesis);
  for (const auto& c : t.children) {
    out += ' ';
    write_into(c, out);
  }
  out += ')';
}

struct SpanInfo {
  std::size_t start;
  std::size_t end;
  bool has_real_token;
};

SpanInfo collect_brackets(const Tree& t, std::size_t start, bool inserted,
                          std::vector<Bracket>& out) {
  using K = Hypothesis::Kind;
  if (t.hypothesis && t.hypothesis->kind == K::PhraseInsertion) inserted = true;
  if (t.is_leaf()) {
    if (t.hypothesis && t.hypothesis->kind == K::Deletion)
      return {start, start, false};
    bool real = !inserted && !(t.hypothesis && t.hypothesis->kind == K::Insertion);
    return {start, start + 1, real};
  }
  std::size_t pos = start;
  bool real = false;
  for (const auto& c : t.children) {
    SpanInfo s = collect_brackets(c, pos, inserted, out);
    pos = s.end;
    real = real || s.has_real_token;
  }
  if (pos > start && real) out.push_back({t.label, start, pos});
  return {start, pos, real};
}

}  // namespace

std::vector<Tree> read_trees(std::string_view text,
                             std::vector<std::string>* warnings) {
  return TreeReader(text, warnings).read_all();
}

std::string write_tree(const Tree& tree) {
  std::string out;
  write_into(tree, out);
  return out;
}

std::vector<TaggedSentence> read_tagged(std::string_view text) {
  std::vector<TaggedSentence> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                      : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;

    TaggedSentence sentence;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      std::string token(line.substr(i, j - i));
      i = j;
      std::size_t slash = token.rfind('/');
      if (slash == std::string::npos || slash == 0 || slash + 1 == token.size())
        throw SyntaxError("token '" + token + "' is not word/tag", line_no);
      std::string tag = normalize_tag(token.substr(slash + 1));
      if (!is_valid_symbol_name(tag))
        throw SyntaxError("invalid tag in '" + token + "'", line_no);
      sentence.words.push_back(token.substr(0, slash));
      sentence.tags.push_back(std::move(tag));
    }
    if (sentence.tags.empty()) continue;
    sentence.id = out.size() + 1;
    out.push_back(std::move(sentence));
  }
  return out;
}

std::vector<Bracket> brackets_of(const Tree& tree) {
  std::vector<Bracket> out;
  collect_brackets(tree, 0, false, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace robparse

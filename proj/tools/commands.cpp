#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "robparse/config.hpp"
#include "robparse/error.hpp"
#include "robparse/evaluation.hpp"
#include "robparse/grammar.hpp"
#include "robparse/normal_parser.hpp"
#include "robparse/recovery.hpp"
#include "robparse/treebank.hpp"

namespace robparse::cli {

namespace {

struct InputFailure {
  std::string message;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure{path + ": cannot read file"};
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  text.erase(std::remove(text.begin(), text.end(), '\r'), text.end());
  return text;
}

template <typename F>
auto with_location(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SyntaxError& e) {
    throw InputFailure{path + ":" + std::to_string(e.line()) + ": " + e.detail()};
  } catch (const Error& e) {
    throw InputFailure{path + ": " + e.what()};
  }
}

std::string format_mean(double mean) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << mean;
  std::string s = os.str();
  if (s.back() == '0') s.pop_back();
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

int cmd_induce(const InduceArgs& args, std::ostream& out, std::ostream& err) {
  try {
    std::string text = slurp(args.treebank);
    std::vector<std::string> warnings;
    auto trees = with_location(args.treebank, [&] { return read_trees(text, &warnings); });
    for (const auto& w : warnings) err << args.treebank << ": warning: " << w << '\n';
    Grammar induced = with_location(args.treebank, [&] { return induce_grammar(trees); });
    const double mean = mean_rule_frequency(induced);
    Grammar result = args.prune ? prune_by_average_frequency(induced) : induced;

    std::ofstream file(args.output);
    if (!file) throw InputFailure{args.output + ": cannot write file"};
    write_grammar(file, result);
    if (!file) throw InputFailure{args.output + ": write failed"};

    out << "rules: " << induced.rules().size() << " \xe2\x86\x92 " << result.rules().size()
        << ", mean: " << format_mean(mean) << '\n';
    return kOk;
  } catch (const InputFailure& f) {
    err << "error: " << f.message << '\n';
    return kInputError;
  }
}

// ---------------------------------------------------------------------------

namespace {

struct SentenceOutput {
  std::string text;
  std::string dump;
  bool ok = false;
};

SentenceOutput parse_one(const Grammar& grammar, const TaggedSentence& sentence,
                         const RecoverOptions& base, const ParseArgs& args) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  const bool dumping = args.dump_chart.has_value();

  std::string status = "failed";
  std::vector<ParseTree> trees;
  std::size_t edges = 0;
  std::vector<std::string> notes;
  std::ostringstream dump;

  std::optional<NormalParse> normal;
  if (args.robust != RobustMode::On) {
    normal = parse_normal(grammar, sentence, args.max_trees, dumping);
    edges += normal->chart.admissions();
    if (dumping) {
      dump << "## sentence " << sentence.id << " pass=normal\n";
      write_chart_dump(dump, normal->chart, grammar);
    }
    if (normal->success) {
      status = "normal";
      trees = std::move(normal->trees);
    } else {
      notes = normal->diagnostics;
    }
  }
  if (status == "failed" && args.robust != RobustMode::Off) {
    RecoverOptions options = base;
    options.max_trees = args.max_trees;
    options.log_admissions = dumping;
    auto result = recover(grammar, sentence, options, normal ? &normal->chart : nullptr);
    edges += result.edges;
    if (dumping) {
      dump << "## sentence " << sentence.id << " pass=robust\n";
      write_chart_dump(dump, result.chart, grammar);
    }
    if (!result.trees.empty()) {
      trees = std::move(result.trees);
      status = trees.front().error == Cost::zero() && !normal ? "normal" : "recovered";
    } else {
      notes.insert(notes.end(), result.diagnostics.begin(), result.diagnostics.end());
    }
  }
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - started).count();

  std::ostringstream os;
  os << "# id=" << sentence.id << " status=" << status
     << " e=" << (trees.empty() ? std::string("-") : trees.front().error.str())
     << " trees=" << trees.size() << " edges=" << edges;
  if (args.timing) os << " time_ms=" << std::fixed << std::setprecision(3) << ms;
  os << '\n';
  if (trees.empty())
    for (const auto& n : notes) os << "# note: " << n << '\n';
  for (const auto& t : trees) os << write_tree(t.root) << '\n';
  return {os.str(), dump.str(), !trees.empty()};
}

}  // namespace

int cmd_parse(const ParseArgs& args, std::ostream& out, std::ostream& err) {
  Config config;
  std::optional<std::string> config_path = args.config;
  if (!config_path)
    if (const char* env = std::getenv(kConfigEnv); env && *env) config_path = env;
  try {
    if (config_path) {
      std::string text = slurp(*config_path);
      try {
        config = parse_config(text);
      } catch (const SyntaxError& e) {
        err << "error: " << *config_path << ":" << e.line() << ": " << e.detail() << '\n';
        return kConfigError;
      }
    }
    if (args.budget) config.budget = Cost::parse(*args.budget);
  } catch (const InputFailure& f) {
    err << "error: " << f.message << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: --budget: " << e.what() << '\n';
    return kConfigError;
  }

  if (auto violated = validate_cost_params(config.params); !violated.empty()) {
    err << "error: invalid cost parameters\n";
    for (const auto& v : violated) err << "  violated: " << v << '\n';
    return kConfigError;
  }
  for (const auto& n : ordering_notices(config.params)) err << "notice: " << n << '\n';

  Grammar grammar;
  std::vector<TaggedSentence> sentences;
  try {
    std::string gtext = slurp(args.grammar);
    grammar = with_location(args.grammar, [&] { return read_grammar_text(gtext); });
    config.apply_to(grammar);
    std::string itext = slurp(args.input);
    sentences = with_location(args.input, [&] { return read_tagged(itext); });
  } catch (const InputFailure& f) {
    err << "error: " << f.message << '\n';
    return kInputError;
  }
  for (const auto& d : validate_grammar(grammar))
    err << (d.severity == Diagnostic::Severity::Error ? "grammar error: " : "grammar warning: ")
        << d.message << '\n';

  RecoverOptions base;
  base.params = config.params;
  base.budget = config.budget;

  std::vector<SentenceOutput> results(sentences.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < sentences.size(); i = next++)
      results[i] = parse_one(grammar, sentences[i], base, args);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(args.jobs, sentences.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  std::ofstream dump_file;
  if (args.dump_chart) {
    dump_file.open(*args.dump_chart);
    if (!dump_file) {
      err << "error: " << *args.dump_chart << ": cannot write file\n";
      return kInputError;
    }
  }
  bool all_ok = true;
  for (const auto& r : results) {
    out << r.text;
    if (dump_file.is_open()) dump_file << r.dump;
    all_ok = all_ok && r.ok;
  }
  return all_ok ? kOk : kSomeFailed;
}

// ---------------------------------------------------------------------------

namespace {

struct Candidate {
  std::size_t id = 0;
  std::optional<Tree> tree;
  std::optional<double> edges;
  std::optional<double> seconds;
};

std::optional<std::string> header_field(const std::string& line, const std::string& key) {
  std::istringstream in(line.substr(1));
  for (std::string item; in >> item;)
    if (item.rfind(key + "=", 0) == 0) return item.substr(key.size() + 1);
  return std::nullopt;
}

std::vector<Candidate> read_candidates(const std::string& text) {
  // Blocks introduced by "# id=..." headers, as written by `parse`.
  std::vector<Candidate> out;
  std::vector<std::pair<std::size_t, std::string>> blocks;  // header line, body
  std::vector<std::string> headers;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::size_t> body_start_line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.rfind("# id=", 0) == 0) {
      headers.push_back(line);
      blocks.emplace_back(line_no, "");
      continue;
    }
    if (!blocks.empty()) blocks.back().second += line + "\n";
  }
  if (headers.empty()) {
    std::size_t id = 0;
    for (auto& t : read_trees(text)) out.push_back({++id, std::move(t), {}, {}});
    return out;
  }
  for (std::size_t i = 0; i < headers.size(); ++i) {
    Candidate c;
    c.id = i + 1;
    if (auto id = header_field(headers[i], "id")) c.id = std::stoul(*id);
    if (auto e = header_field(headers[i], "edges")) c.edges = std::stod(*e);
    if (auto t = header_field(headers[i], "time_ms")) c.seconds = std::stod(*t) / 1000.0;
    auto status = header_field(headers[i], "status");
    if (status && *status != "failed") {
      try {
        auto trees = read_trees(blocks[i].second);
        if (!trees.empty()) c.tree = std::move(trees.front());
      } catch (const SyntaxError& e) {
        throw SyntaxError(e.detail(), blocks[i].first + e.line());
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
  try {
    std::string gtext = slurp(args.gold);
    std::string ctext = slurp(args.candidate);
    std::vector<std::string> warnings;
    auto gold = with_location(args.gold, [&] { return read_trees(gtext, &warnings); });
    for (const auto& w : warnings) err << args.gold << ": warning: " << w << '\n';
    auto candidates = with_location(args.candidate, [&] { return read_candidates(ctext); });

    if (candidates.size() != gold.size()) {
      std::size_t first = std::min(candidates.size(), gold.size()) + 1;
      throw InputFailure{"sentence " + std::to_string(first) + ": " +
                         (candidates.size() < gold.size() ? "no candidate" : "no gold tree") +
                         " (gold has " + std::to_string(gold.size()) +
                         " trees, candidate has " + std::to_string(candidates.size()) + ")"};
    }

    std::vector<SentenceResult> results;
    std::size_t excluded = 0;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      const std::size_t gold_length = token_count(gold[i]);
      if (!candidates[i].tree) {
        ++excluded;
        continue;
      }
      const std::size_t cand_length = token_count(*candidates[i].tree);
      if (cand_length != gold_length)
        throw InputFailure{"sentence " + std::to_string(candidates[i].id) +
                           ": candidate covers " + std::to_string(cand_length) +
                           " tokens, gold covers " + std::to_string(gold_length)};
      SentenceResult r;
      r.candidate = brackets_of(*candidates[i].tree);
      r.gold = brackets_of(gold[i]);
      r.length = gold_length;
      r.edges = candidates[i].edges;
      r.seconds = candidates[i].seconds;
      results.push_back(std::move(r));
    }
    if (results.empty()) throw InputFailure{"no scorable sentences"};

    Report report = accuracy(results, excluded);
    write_report_text(out, report);
    out << '\n';
    write_report_keyvalue(out, report);
    return kOk;
  } catch (const InputFailure& f) {
    err << "error: " << f.message << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace robparse::cli

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace robparse::cli;
  CLI::App app{"robparse: least-errors robust parsing over POS-tagged input"};
  app.require_subcommand(1);

  InduceArgs induce;
  auto* induce_cmd = app.add_subcommand("induce", "Induce a grammar from a bracketed treebank");
  induce_cmd->add_option("treebank", induce.treebank, "Bracketed trees with word/tag leaves")
      ->required();
  induce_cmd->add_option("output", induce.output, "Grammar file to write")->required();
  induce_cmd->add_flag("--prune", induce.prune, "Drop rules below the mean rule frequency");

  ParseArgs parse;
  std::string robust = "auto";
  auto* parse_cmd = app.add_subcommand("parse", "Parse tagged sentences, recovering on failure");
  parse_cmd->add_option("grammar", parse.grammar, "Grammar file")->required();
  parse_cmd->add_option("input", parse.input, "One word/tag sentence per line")->required();
  parse_cmd->add_option("--config", parse.config, "key = value cost configuration");
  parse_cmd->add_option("--max-trees", parse.max_trees, "Trees printed per sentence")
      ->check(CLI::PositiveNumber);
  parse_cmd->add_option("--budget", parse.budget, "Largest admissible error value");
  parse_cmd->add_option("--robust", robust, "auto: recover only when the normal pass fails")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  parse_cmd->add_option("--jobs", parse.jobs, "Sentences parsed in parallel")
      ->check(CLI::PositiveNumber);
  parse_cmd->add_option("--dump-chart", parse.dump_chart, "Write admitted states to this file");
  bool no_timing = false;
  parse_cmd->add_flag("--no-timing", no_timing, "Omit elapsed time from the output");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Crossing-brackets report against gold trees");
  eval_cmd->add_option("gold", eval.gold, "Gold treebank")->required();
  eval_cmd->add_option("candidate", eval.candidate, "Output of `parse` or plain trees")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  if (*induce_cmd) return cmd_induce(induce, std::cout, std::cerr);
  if (*parse_cmd) {
    parse.robust = robust == "on" ? RobustMode::On : robust == "off" ? RobustMode::Off
                                                                      : RobustMode::Auto;
    parse.timing = !no_timing;
    return cmd_parse(parse, std::cout, std::cerr);
  }
  return cmd_eval(eval, std::cout, std::cerr);
}

#ifndef ROBPARSE_TOOLS_COMMANDS_HPP
#define ROBPARSE_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace robparse::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kSomeFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kConfigError = 3;

struct InduceArgs {
  std::string treebank;
  std::string output;
  bool prune = false;
};

enum class RobustMode { Auto, On, Off };

struct ParseArgs {
  std::string grammar;
  std::string input;
  std::optional<std::string> config;
  std::size_t max_trees = 1;
  std::optional<std::string> budget;
  RobustMode robust = RobustMode::Auto;
  std::size_t jobs = 1;
  std::optional<std::string> dump_chart;
  bool timing = true;
};

struct EvalArgs {
  std::string gold;
  std::string candidate;
};

/// Environment variable consulted when --config is absent.
inline constexpr const char* kConfigEnv = "ROBPARSE_CONFIG";

int cmd_induce(const InduceArgs& args, std::ostream& out, std::ostream& err);
int cmd_parse(const ParseArgs& args, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err);

}  // namespace robparse::cli

#endif  // ROBPARSE_TOOLS_COMMANDS_HPP

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nanoword::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kInconsistent = 3,
  kUnknown = 4,
};

enum class Format { Report, Tsv };

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::optional<std::string> builtin;
  std::size_t k = 1;
  bool k_given = false;
  bool lifted = false;
  std::size_t n = 0;
  std::size_t max_letters = 8;
  bool max_letters_given = false;
  std::size_t max_states = 200000;
  unsigned threads = 1;
  Format format = Format::Report;
};

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_validate(const RunConfig& config, std::ostream& out);
int cmd_canon(const RunConfig& config, std::ostream& out);
int cmd_invariants(const RunConfig& config, std::ostream& out);
int cmd_equiv(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_lift(const RunConfig& config, std::ostream& out);
int cmd_project(const RunConfig& config, std::ostream& out);
int cmd_enumerate(const RunConfig& config, std::ostream& out);
int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace nanoword::cli

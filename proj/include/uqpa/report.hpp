#pragma once

// Report generation behind the command-line tool.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "uqpa/fusion.hpp"
#include "uqpa/relations.hpp"

namespace uqpa {

enum class Command { Verify, Dims, Conjecture, Hom, Basis, All };
enum class Format { Json, Markdown, Csv };

std::optional<Command> parse_command(const std::string& s);
std::optional<Format> parse_format(const std::string& s);
std::string command_name(Command c);

struct RunConfig {
  Command command = Command::All;
  std::vector<int> ps{2, 3};
  std::vector<std::string> relations;  // empty: every relation
  std::size_t budget = kDefaultBudget;
  Format format = Format::Json;
  std::string out;                     // empty: stdout
  int max_n = -1;                      // -1: 6 for dims, 10 for conjecture
  std::optional<FloorConvention> convention;  // none: all three
  int oracle_max_n = 6;
  bool timing = false;                 // false writes elapsed_ms as null
  unsigned threads = 0;
};

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitSkipOnly = 3 };

struct RunResult {
  int exit_code = kExitOk;
  std::string text;
  std::size_t executed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

/// Empty when the config is usable, otherwise the reason it is not.
std::string validate(const RunConfig& cfg);

/// Builds the report. Does not touch the filesystem.
RunResult build_report(const RunConfig& cfg);

/// build_report, then writes text to cfg.out (or stdout).
/// Invalid configs return kExitUsage with the reason in text.
RunResult run(const RunConfig& cfg);

}  // namespace uqpa

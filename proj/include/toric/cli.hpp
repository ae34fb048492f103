#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "toric/classify.hpp"
#include "toric/fan.hpp"

namespace toric {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidFan = 1,
  kExitGeometry = 2,
  kExitParse = 3,
  kExitConsistency = 4,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A fan argument: a JSON file path, or "catalog:NAME" / "catalog:NAME:p1,p2,...".
/// Throws ParseError on malformed specs or unreadable files.
Fan resolve_fan(const std::string& spec);

/// Parses "lo:hi" (or a single integer) into an inclusive range.
ParamRange parse_range(const std::string& text);

}  // namespace toric

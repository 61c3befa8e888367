#pragma once

#include "cli/config.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace hyperoep::cli {

// Each command returns an ExitCode; diagnostics go to `err`, tables and
// summaries to `out`.

int cmd_solve_radial(const RunConfig& rc, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& rc, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& rc, std::ostream& out, std::ostream& err);
int cmd_selftest(const RunConfig& rc, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperoep::cli

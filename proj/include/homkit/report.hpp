#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homkit {

/// Full command-line driver: parses arguments, runs the requested command,
/// writes one JSON report document to `out`. Returns the process exit code:
/// 0 all verified/computed, 1 usage or parse error, 2 refutation witness
/// found, 3 inconclusive-at-budget results present.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homkit

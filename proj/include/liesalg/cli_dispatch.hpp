#pragma once

#include <string>
#include <vector>

#include "liesalg/json_io.hpp"

namespace liesalg {

// Exit codes: 0 success, 1 domain error (machine-readable error JSON),
// 2 malformed input or usage error.
struct CliResult {
  int exit_code = 0;
  std::string output;  // JSON text destined for stdout
};

CliResult run_cli(const std::vector<std::string>& args);

// Corpus runner: executes every case file under dir/cases in name order and
// compares outputs exactly. Returns the summary JSON; mismatches set a
// nonzero exit code. Randomized invariance cases use the fixed seed stored
// in the case file.
CliResult run_corpus(const std::string& dir);

std::string dump_json(const Json& j);

}  // namespace liesalg

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace helly::cli {

enum class Status { Ok, InvalidInput, Inconclusive, Counterexample };

std::string to_string(Status s);
/// 0, 2, 3 and 4 respectively.
int exit_code(Status s);

/// Runs one command line (without the program name). Exactly one JSON
/// document goes to `out`; diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace helly::cli

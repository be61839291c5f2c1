#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wmpcli {

// Dispatch one command line (without the program name). Writes the result
// payload to out and diagnostics to err. Returns 0 on success or a passing
// verification, 1 on a failed verification or internal error, 2 on a usage
// error. Never calls exit().
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Whitespace tokenizer for manifest lines.
std::vector<std::string> split_command(const std::string& line);

} // namespace wmpcli

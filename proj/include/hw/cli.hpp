#pragma once

#include <string>
#include <vector>

namespace hw::cli {

struct CommandResult
{
	int status = 0; // 0 all checks passed, 1 a check failed, 2 usage error
	std::string out;
	std::string err;
};

/// Runs one `hw` invocation; args exclude the program name.
CommandResult run_command(std::vector<std::string> const &args);

/// Splits "a(0),a(1)" at top-level commas.
std::vector<std::string> split_top_level(std::string const &text);

} // namespace hw::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ndga::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kInputError = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& log);

// Every library operation with the subcommand that exposes it, e.g. {"mc_coefficient", "mc"}.
struct OperationEntry {
    std::string operation;
    std::string command;
};

const std::vector<OperationEntry>& operation_registry();
// Space-separated subcommand paths known to the parser, e.g. "forms omega".
std::vector<std::string> command_paths();

}  // namespace ndga::cli

#pragma once

#include <string>
#include <vector>

namespace kpsumm::cli {

// Runs the command-line tool in-process. args mirrors main()'s argv,
// program name included. Returns the process exit code: 0 on success,
// 1 on input or domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace kpsumm::cli

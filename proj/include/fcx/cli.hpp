#ifndef FCX_CLI_HPP
#define FCX_CLI_HPP

#include <string>
#include <vector>

namespace fcx::cli {

// Exit codes: 0 success / all pass, 1 verification failure or runtime error,
// 2 usage error, 3 resource skip under --strict.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

} // namespace fcx::cli

#endif // FCX_CLI_HPP

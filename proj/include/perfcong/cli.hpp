#ifndef PERFCONG_CLI_HPP_
#define PERFCONG_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace perfcong {

// Dispatches one CLI invocation.  Results go to `out`, diagnostics to `err`.
// Exit codes: 0 success/covered, 1 parse or usage error, 2 validation
// failure, 3 verification falsified.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace perfcong

#endif  // PERFCONG_CLI_HPP_

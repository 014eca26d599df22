#pragma once

namespace maxlab::cli {

/// Full command-line front end. Exit codes: 0 = all executed suites pass
/// (report-only suites pass on completion), 1 = suite failure, 2 = usage or
/// config error (message names the offending key/line).
int run(int argc, const char* const* argv);

}  // namespace maxlab::cli

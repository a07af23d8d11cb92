#pragma once

#include <ostream>

namespace gofboot::cli {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
    kNotRejected = 0,
    kUsageError = 1,
    kDataError = 2,
    kRejected = 3,
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gofboot::cli

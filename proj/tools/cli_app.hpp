#pragma once

#include <iosfwd>

namespace adsvol::cli {

// Exit codes: 0 success, 2 input/schema error, 3 numerical failure,
// 4 budget exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace adsvol::cli

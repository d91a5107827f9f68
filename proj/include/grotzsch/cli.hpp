#pragma once

#include <iosfwd>

namespace grotzsch {

// exit codes: 0 ok, 1 io/parse/verification, 2 triangle or non-sphere input,
// 3 invalid pair, 4 internal
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grotzsch

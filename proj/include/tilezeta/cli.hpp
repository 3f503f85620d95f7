#pragma once

#include <ostream>

namespace tilezeta {

/// Exit codes: 0 success, 1 invalid input, 2 usage error, 3 failed self-check.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tilezeta

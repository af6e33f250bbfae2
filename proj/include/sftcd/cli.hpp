#pragma once

#include <iosfwd>

namespace sftcd {

/// Exit status: 0 success, 1 a verification check failed, 2 usage, parse or
/// input errors. JSON goes to `out`, human-readable notes to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sftcd

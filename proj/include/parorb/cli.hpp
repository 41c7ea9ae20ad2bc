#pragma once

#include <ostream>

namespace parorb::cli {

/// Runs the command line. Returns 0 on success, 1 on domain errors (a JSON
/// error object is written to err), 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace parorb::cli

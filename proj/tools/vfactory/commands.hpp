#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vfactory {

/// Runs one vfactory invocation. `args` excludes the program name.
/// Structured output goes to `out` as JSON, diagnostics to `err`.
/// Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vfactory

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wks {

/// Runs one command line (program name excluded). Results go to out (or --out), diagnostics to
/// err. Returns 0 on success, 1 when a validation fails, 2 on argument or precondition errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wks

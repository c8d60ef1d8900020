#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace intorder {

/// Toolkit driver over already-split arguments (no program name). Every
/// outcome, including errors, is a JSON body on `out`; exit codes are 0 for
/// success, 1 for usage/parse/IO problems, 2 for domain errors, 3 for a
/// failed internal self-check.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace intorder

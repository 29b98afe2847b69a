#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treepat::cli {

/// Runs one treepat command. Returns 0 on success, 1 on usage errors,
/// 2 on computation errors (malformed tree literals carry their offset).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treepat::cli

#ifndef GDENS_TOOLS_CLI_HPP
#define GDENS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gdens/integer_set.hpp"
#include "gdens/window_family.hpp"

namespace gdens::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kHorizon = 3,
  kInconclusive = 4,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "empty", "list:a,b,c", "intervals:a-b,c-d", "blocks", "squares", "cubes",
/// "arith:a,d", "file:<path>". "blocks" is ⋃F_n of `family`.
IntegerSet parse_set_spec(std::string_view spec, const WindowFamily& family);

}  // namespace gdens::cli

#endif

#ifndef APOLAR_TOOLS_CLI_HPP
#define APOLAR_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace apolar::cli {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool color = false;
};

/// Runs one invocation; args excludes the program name.
/// Exit codes: 0 certified or exact, 2 bounds only / conditional,
/// 3 a check was refuted, 1 usage or input error.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace apolar::cli

#endif

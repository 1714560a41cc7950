// ptab command-line front end.
//
// Exit codes:
//   0  success / open tableau / satisfiable / valid
//   1  closed tableau / unsatisfiable / not valid
//   2  usage or parse error
//   3  resource cap exceeded
//   4  inconsistent input (closed discourse where an open one is required)
//   5  corpus failure
//   6  engines disagree under --cross-check

#ifndef PTAB_CLI_HPP_
#define PTAB_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ptab {

  enum ExitCode : int {
    Ok = 0,
    Closed = 1,
    Usage = 2,
    Resource = 3,
    Inconsistent = 4,
    CorpusFailure = 5,
    Disagreement = 6,
  };

  // `args` excludes the program name.
  int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ptab

#endif  // PTAB_CLI_HPP_

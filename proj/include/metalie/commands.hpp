#ifndef METALIE_COMMANDS_HPP_
#define METALIE_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "metalie/completion.hpp"
#include "metalie/presentations.hpp"

namespace metalie {

  // Completion followed by reduce_basis; origins follow the reduced elements.
  struct ReducedCompletion {
    CompletionResult         raw;
    std::vector<Poly>        basis;
    std::vector<std::string> origins;
  };
  ReducedCompletion complete_and_reduce(Presentation const& p, CompletionConfig const& cfg);

  struct VerifyReport {
    bool        pass = false;
    std::string text;  // deterministic, ends with a PASS/FAIL line
  };
  VerifyReport verify_circuit(std::size_t n, CompletionConfig const& cfg);
  VerifyReport verify_tree(Graph const& tree, CompletionConfig const& cfg);
  VerifyReport verify_cu3(CompletionConfig const& cfg);
  VerifyReport verify_cu4();

  // Whole command line without the program name. Returns the process exit code:
  // 0 success, 1 error or FAIL, 2 degree-capped completion.
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace metalie

#endif  // METALIE_COMMANDS_HPP_

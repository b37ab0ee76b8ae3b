/*
  Command-line surface. run_cli executes exactly one subcommand and writes
  deterministic output:

    jh       Steinberg series (--parabolic for I, --twist for w)
    induced  series of an induced representation (--K required)
    kl       one Kazhdan-Lusztig polynomial (--x, --y)
    count    |W^I_p| (--I)
    verify   consistency suites (--suite all|euler|smooth|support|coxeter|kl)

  Exit codes: 0 success, 1 usage error, 2 validation error, 3 arithmetic
  overflow, 4 internal-consistency failure. Errors go to the error stream
  with the machine-parsable prefix "error:<code>:".
*/

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace steinberg {

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steinberg

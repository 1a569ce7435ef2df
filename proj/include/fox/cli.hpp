#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fox {

// Runs the command-line interface on `args` (the argument list without the
// program name), writing results to `out` and diagnostics to `err`; a
// polynomial argument of "-" is read from `in` instead.
//
// Exit codes:
//   0  success
//   2  rejected input (parse, rank, field, or validation errors)
//   3  bounded verdict: the computation ran out of its search budget or a
//      certificate could not be completed (budget-exhausted,
//      unresolved-simplicity, unresolved-membership,
//      not-divisible-within-bound); with --json the "status" key
//      distinguishes the cases.
//
// The default field is Q, overridable by the FOX_DEFAULT_FIELD environment
// variable and by --field.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err, std::istream& in);

} // namespace fox

/**
 * @file cli.hpp
 * @brief Command-line front end, callable in-process.
 *
 * Subcommands: dinv, theta, simple, surgery, atlas, verify.
 * Exit codes: 0 success, 1 domain error, 2 verification failure,
 * 3 internal invariant violation, 64 usage error.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratgenus {

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratgenus

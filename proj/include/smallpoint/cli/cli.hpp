#pragma once

// Command-line front end. Exit codes: 0 found / success, 2 input error,
// 3 no real point, 4 inconclusive, 5 internal invariant violated.

#include "smallpoint/exactnum/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace smallpoint {

enum ExitCode : int {
    exit_ok = 0,
    exit_input = 2,
    exit_no_point = 3,
    exit_inconclusive = 4,
    exit_invariant = 5,
};

/* args excludes the program name */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/* exact decimal expansion; input_error unless the denominator is a power of two */
std::string dyadic_decimal(const Rat& x);

/* "3", "-2/7", "0.125" or "1e-6", read exactly */
Rat parse_exact_number(const std::string& s);

} // namespace smallpoint

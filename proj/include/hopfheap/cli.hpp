#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfheap::cli {

/// Exit statuses of every command.
inline constexpr int kPass = 0;
inline constexpr int kAxiomFailure = 1;
inline constexpr int kInputError = 2;

/// Runs one command.  args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfheap::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace beurling::cli {

/// Process exit codes. Every command maps each execution path to exactly one.
///
///  decide, oracle    0 contained / bounded, 1 not contained / blow-up, 2 inconclusive
///  family            0 member contained (rigidity: every candidate refuted), 1 otherwise
///  cycle-map         0 a cycling automorphism exists, 1 none exists
///  classify, pushforward  0 on success
///  all commands      2 when the engine gives up (jet order cap, internal failure),
///                    3 on malformed input or command line
enum ExitCode : int { kPositive = 0, kNegative = 1, kInconclusive = 2, kInputError = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace beurling::cli

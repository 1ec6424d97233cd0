#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace njconst::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

/// Runs one invocation. `args` excludes the program name. Subcommands:
/// compute, sweep, verify, lemmas.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace njconst::cli

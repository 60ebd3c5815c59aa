#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "pcconj/pc.hpp"

namespace pcconj::cli {

/// Exit codes: decided TRUE (or plain success), decided FALSE, error.
inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kError = 2;

/// Builds a context from its CLI identifier: Bn, Bn-X, colored, typeB,
/// affineA, affineC, IBn. For typeB and affineA the strand count is that of
/// the braid realization (rank + 1).
GroupContext named_context(const std::string& group, int strands,
                           const std::set<int>& x);

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pcconj::cli

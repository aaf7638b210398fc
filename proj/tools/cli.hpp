#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "metacyc/group.hpp"

namespace metacyc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on argv[1..]; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "i,j;i,j;..." -> elements. Empty input gives an empty list.
std::vector<GroupElement> parse_elements(const std::string& text);

/// Enumeration cap from METACYC_CAP, else the library default.
u64 default_cap();

}  // namespace metacyc::cli

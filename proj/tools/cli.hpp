// cli.hpp - the command-line front end as a callable function.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planardist {

// Exit codes: 0 success, 1 usage or input error, 2 a bound violation, lemma
// failure or recount disagreement was found.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFinding = 2;

// `args` excludes the program name. `in` is read for `--in -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace planardist

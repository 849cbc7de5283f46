// The `ent2` command line. Exit codes: 0 accept/agree, 1 reject/disagree,
// 2 usage, parse or I/O error.

#ifndef ENT2_CLI_HPP
#define ENT2_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ent2::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ent2::cli

#endif  // ENT2_CLI_HPP

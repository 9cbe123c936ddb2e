#ifndef QBMG_CLI_HPP
#define QBMG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qbmg {

// Dispatches a full command line (without argv[0]). Exit codes:
//   0  property holds / construction succeeded
//   1  property fails (witness printed)
//   2  input or guard error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbmg

#endif

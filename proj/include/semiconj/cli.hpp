#ifndef SEMICONJ_CLI_HPP_
#define SEMICONJ_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace semiconj {

//! Runs the command line given argv-style arguments (without the program
//! name). Returns the process exit code: 0 success, 1 validation/domain
//! error, 2 usage error.
int cli_run(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err);

}  // namespace semiconj

#endif  // SEMICONJ_CLI_HPP_

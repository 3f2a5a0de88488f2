#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace framelat {

// Batch dispatcher behind the command line tool. args excludes the program
// name. Reports go to out, errors to err. Returns 0 on success, 1 on
// negative verdicts (property fails / nothing found / quasiequation
// falsified), 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace framelat

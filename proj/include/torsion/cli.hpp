#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torsion {

// args excludes the program name. Results go to out as JSON lines,
// diagnostics to err. Exit codes: 0 every check passed, 1 a mathematical
// check failed, 2 usage or I/O error.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace torsion

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringline {

// Runs the command-line front end on argv-style arguments (program name
// excluded).  Returns the process exit code: 0 on success, 1 when a
// certification or verification fails (witness written to err), 2 on usage,
// parse, or input errors.  Honors the RINGLINE_CAP environment variable as an
// override of the ring order cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringline

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stabiliscope {

// Full command-line driver, stream-parameterised so it can run in-process.
// `args` excludes the program name. Exit codes: 0 success, 1 bad input,
// 2 unstable verdict (analyze), 3 budget exhausted (msa). Verdict codes
// never depend on formatting options.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace stabiliscope

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stablehit::cli
{
    enum ExitCode : int
    {
        success = 0,
        proven_none = 1,
        hypothesis_unmet_unknown = 2,
        input_error = 3,
        budget_exhausted = 4,
        internal_violation = 5
    };

    /// Runs one invocation. args excludes the program name. Results go to
    /// `out`, diagnostics to `err`; `in` is read when no input file is given.
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

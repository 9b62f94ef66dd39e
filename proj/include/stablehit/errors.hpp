#pragma once

#include <stdexcept>
#include <string>

namespace stablehit
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Malformed user input: bad parameters, bad files, out-of-range ids.
    class InputError : public Error
    {
    public:
        using Error::Error;
    };

    /// A search exceeded its configured node or step budget. Never a verdict.
    class BudgetExceeded : public Error
    {
    public:
        using Error::Error;
    };

    /// An internal invariant failed. Always a bug.
    class InvariantViolation : public Error
    {
    public:
        using Error::Error;
    };
}

#pragma once

#include <stdexcept>
#include <string>

namespace hfree
{
    /// Base of every error the library throws.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Malformed input or a parameter outside its documented range.
    class InvalidArgument : public Error
    {
    public:
        using Error::Error;
    };

    /// A configured resource limit was hit. Never means "no".
    class BudgetExceeded : public Error
    {
    public:
        using Error::Error;
    };
}

#pragma once

#include <stdexcept>
#include <string>

namespace quadgenus {

/// Input violates an operation's precondition (bad discriminant, zero modulus, ...).
class InvalidInput : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Seeing one of these means a bug.
class InternalCheckFailed : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

} // namespace quadgenus

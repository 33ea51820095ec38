#pragma once

#include <stdexcept>
#include <string>

namespace planepaint {

/// Base class of every error raised by the library. The CLI maps these to
/// exit code 2.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A search ran past its monomial-store or wall-clock budget.
class BudgetExceeded : public Error
{
public:
    explicit BudgetExceeded(const std::string& what) : Error("budget exceeded: " + what) {}
};

/// Input graph is larger than an exhaustive oracle accepts.
class SizeLimitExceeded : public Error
{
public:
    explicit SizeLimitExceeded(const std::string& what) : Error("size limit exceeded: " + what) {}
};

/// A documented precondition of an operation does not hold.
class PreconditionFailed : public Error
{
public:
    explicit PreconditionFailed(const std::string& what) : Error("precondition failed: " + what) {}
};

} // namespace planepaint

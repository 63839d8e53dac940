#ifndef LENGTHSETS_ERRORS_HPP
#define LENGTHSETS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lengthsets
{

/// Precondition or domain violation (bad input). CLI exit status 2.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// The operation is not supported for this configuration (e.g. a closed
/// form that needs a prime stream given composite entries).
class UnsupportedConfiguration : public DomainError
{
public:
    using DomainError::DomainError;
};

/// A search or enumeration ran out of its node budget. `frontier` describes
/// where the search stopped. CLI exit status 3.
class BudgetExhausted : public std::runtime_error
{
public:
    BudgetExhausted(const std::string &what, std::string frontier = {})
        : std::runtime_error(what), m_frontier(std::move(frontier))
    {
    }

    const std::string &frontier() const noexcept
    {
        return m_frontier;
    }

private:
    std::string m_frontier;
};

/// An internal invariant of a construction failed. Never expected.
class ConstructionError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace lengthsets

#endif

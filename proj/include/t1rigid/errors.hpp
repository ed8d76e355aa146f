#ifndef T1RIGID_ERRORS_HPP
#define T1RIGID_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace t1rigid {

/// Malformed input: a face outside its ground set, the void complex, the unit ideal.
class InputError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside an operation's domain (link of a non-face, overlapping grounds).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// An exhaustive enumeration would exceed the configured vertex budget.
class BudgetError : public std::runtime_error
{
public:
    BudgetError(const std::string & what, std::size_t needed, std::size_t allowed)
        : std::runtime_error(what + " (needs " + std::to_string(needed) + " vertices, budget is "
                             + std::to_string(allowed) + ")"),
          needed_(needed), allowed_(allowed)
    {
    }

    std::size_t needed() const { return needed_; }
    std::size_t allowed() const { return allowed_; }

private:
    std::size_t needed_;
    std::size_t allowed_;
};

/// Upper bound on the number of vertices an exponential enumeration may range over.
struct Limits
{
    std::size_t max_vertices = 24;

    void check(std::size_t vertices, const char * what) const
    {
        if (vertices > max_vertices)
            throw BudgetError(what, vertices, max_vertices);
    }
};

} // namespace t1rigid

#endif

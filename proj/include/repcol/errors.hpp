#ifndef REPCOL_ERRORS_HPP
#define REPCOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace repcol {

/** Malformed input file. The message names the offending line when known. */
class ParseError : public std::runtime_error
{
    public:
        explicit ParseError(const std::string& what, int line = 0)
            : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
              line_(line) {}
        int line() const noexcept { return line_; }

    private:
        int line_;
};

/**
 * An exact computation refused to run because its input exceeds a configured
 * size cap. Caps never degrade into approximations.
 */
class CapExceeded : public std::runtime_error
{
    public:
        explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/** The problem instance admits no solution (e.g. conflicting fixings). */
class Infeasible : public std::runtime_error
{
    public:
        explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

/** Preconditions on orderings / precolorings / weights were violated. */
class InvalidInput : public std::invalid_argument
{
    public:
        explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace repcol

#endif  // REPCOL_ERRORS_HPP

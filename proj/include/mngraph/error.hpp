#ifndef MNGRAPH_ERROR_HPP
#define MNGRAPH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mngraph {

/// Raised when an argument violates an operation's precondition.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by the text reader; carries the 1-based line that failed.
class ParseError : public InputError {
public:
    ParseError(int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Raised when an exact search would exceed a configured size limit.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mngraph

#endif  // MNGRAPH_ERROR_HPP

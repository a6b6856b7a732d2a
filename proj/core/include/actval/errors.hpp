#ifndef ACTVAL_ERRORS_HPP
#define ACTVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace actval {

// Mismatched state counts between distributions / functions / assignments.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Conditioning or restriction on an event of probability zero.
class ZeroEventError : public std::domain_error {
public:
    explicit ZeroEventError(const std::string& what) : std::domain_error(what) {}
};

// An enumeration guard was exceeded (state count, candidate count, policy count).
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// Semantic validation failure (bad distribution, bad parameter range, bad model).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Scenario text could not be parsed; carries 1-based line/column.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& msg)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column), message_(msg) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

// A measurement construction's preconditions do not hold; names the failed clause.
class ConstructionError : public std::domain_error {
public:
    explicit ConstructionError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace actval

#endif

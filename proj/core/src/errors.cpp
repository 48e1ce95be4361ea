#include "asyncflow/errors.hpp"

namespace asyncflow {

namespace {

std::string locate(const std::string& what, std::size_t line, std::size_t column)
{
    if (line == 0) {
        return what;
    }
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
}

} // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(locate(what, line, column)), line_(line), column_(column)
{
}

} // namespace asyncflow

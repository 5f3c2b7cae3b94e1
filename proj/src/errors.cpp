#include "convcode/errors.hpp"

namespace convcode {
namespace {

std::string with_position(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ", column " + std::to_string(column);
    return out + ": " + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(with_position(message, line, column)), line(line), column(column) {}

}  // namespace convcode

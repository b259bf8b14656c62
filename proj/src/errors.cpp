#include "hsd/errors.hpp"

namespace hsd {

namespace {
std::string located(const std::string& what, std::size_t line, std::size_t offset)
{
    if (line == 0 && offset == 0) return what;
    std::string out = what + " (";
    if (line != 0) out += "line " + std::to_string(line);
    if (line != 0 && offset != 0) out += ", ";
    if (offset != 0) out += "offset " + std::to_string(offset);
    return out + ")";
}
} // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t offset) :
    Error(located(what, line, offset)), line_(line), offset_(offset)
{
}

} // namespace hsd

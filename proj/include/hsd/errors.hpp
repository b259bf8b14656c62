#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsd {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. `line` is 1-based (0 if unknown), `offset` is a column or character offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t offset = 0);
    std::size_t line() const { return line_; }
    std::size_t offset() const { return offset_; }

private:
    std::size_t line_;
    std::size_t offset_;
};

/// Data that contradicts itself (conflicting quasigroup cells, duplicate blocks, bad checksums).
class InconsistencyError : public Error {
public:
    using Error::Error;
};

/// A requested ingredient (MOLS, HSD of some type) is not available.
class IngredientError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Arithmetic shows the requested type cannot exist (non-integral block count etc).
class InfeasibleTypeError : public Error {
public:
    using Error::Error;
};

} // namespace hsd

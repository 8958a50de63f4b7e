#pragma once

#include <stdexcept>
#include <string>

namespace pha {

// Library errors: bad inputs, field mismatches, division by zero.
// Mathematical check *failures* are not errors; they are reported
// through CheckReport values.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed instance description (CLI layer maps this to exit code 2).
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

} // namespace pha

#pragma once

#include <stdexcept>
#include <string>

namespace bq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input (file syntax, table shape, out-of-range entries).
// Distinct from ValidationError: a well-formed input that fails the axioms.
struct FormatError : Error {
    FormatError(int line_no, const std::string& msg)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
    int line = 0;
};

struct ValidationError : Error {
    using Error::Error;
};

struct NonUnitError : Error {
    NonUnitError(int value, int modulus)
        : Error(std::to_string(value) + " is not a unit mod " + std::to_string(modulus)),
          value(value),
          modulus(modulus) {}
    int value;
    int modulus;
};

} // namespace bq

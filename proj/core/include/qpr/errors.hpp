#pragma once

#include <stdexcept>
#include <string>

namespace qpr {

// A network, query, state vector, or distribution violates an invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A network document is malformed (syntax or field errors).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A document file cannot be read at all.
class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact computation would exceed a configured cap: the brute-force state
// space or the inclusion-exclusion subset count.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qpr

#pragma once

#include <stdexcept>
#include <string>

namespace styloai {

// Bad input data: malformed files, unmapped labels, schema mismatches.
// The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Caller violated a documented precondition (bad k, wrong vector length).
// The CLI maps this to exit code 1 when it comes from flag handling.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace styloai

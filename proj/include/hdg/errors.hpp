#pragma once

#include <stdexcept>
#include <string>

namespace hdg {

// Precondition or argument violations (CLI exit code 2).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Problem size beyond supported limits (CLI exit code 3).
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A graph/Hadamard pair failed exact certification.
class certification_error : public std::runtime_error {
public:
    explicit certification_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Column signing produced no all-ones 0-eigenvector column.
class alignment_error : public certification_error {
public:
    explicit alignment_error(const std::string& msg) : certification_error(msg) {}
};

// Floating-point eigensolver failure (CLI exit code 3).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hdg

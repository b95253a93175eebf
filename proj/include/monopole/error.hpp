/// @file error.hpp
/// @brief Error categories shared by every module; each maps to a CLI exit code.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace monopole {

enum class ErrorKind : int {
    Input = 1,           ///< malformed or inconsistent input data
    Hypothesis = 2,      ///< a theorem hypothesis is not met
    OracleMismatch = 3,  ///< two independent routes disagree; always a defect
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string path, const std::string& message)
        : std::runtime_error(path.empty() ? message : path + ": " + message),
          kind_(kind), path_(std::move(path)), message_(message) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// Location of the offending field, e.g. "basic_classes[0].c1"; may be empty.
    const std::string& path() const noexcept { return path_; }
    const std::string& message() const noexcept { return message_; }

private:
    ErrorKind kind_;
    std::string path_;
    std::string message_;
};

class InputError : public Error {
public:
    explicit InputError(const std::string& message, std::string path = {})
        : Error(ErrorKind::Input, std::move(path), message) {}
};

class HypothesisError : public Error {
public:
    explicit HypothesisError(const std::string& message, std::string path = {})
        : Error(ErrorKind::Hypothesis, std::move(path), message) {}
};

class OracleMismatch : public Error {
public:
    explicit OracleMismatch(const std::string& message)
        : Error(ErrorKind::OracleMismatch, {}, message) {}
};

/// (c)_k vanished inside a terminating hypergeometric sum.
class DegenerateParameter : public InputError {
public:
    explicit DegenerateParameter(std::uint64_t k)
        : InputError("degenerate parameter: (c)_k = 0 at k = " + std::to_string(k)), k_(k) {}
    std::uint64_t k() const noexcept { return k_; }

private:
    std::uint64_t k_;
};

inline int exit_code(ErrorKind kind) { return static_cast<int>(kind); }

}  // namespace monopole

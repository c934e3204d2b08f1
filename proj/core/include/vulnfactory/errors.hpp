#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace vulnfactory {

/// Base of every error thrown by the library. `code()` is a stable,
/// machine-readable tag used by the CLI's error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    [[nodiscard]] const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Input outside an operation's domain (e.g. exposure factor > 1).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& message) : Error("domain_error", message) {}
};

/// Persisted state exists but cannot be parsed. Never auto-repaired.
class CorruptionError : public Error {
public:
    explicit CorruptionError(const std::string& message) : Error("corruption_error", message) {}
};

/// Filesystem read/write/rename/lock failure.
class PersistenceError : public Error {
public:
    explicit PersistenceError(const std::string& message) : Error("persistence_error", message) {}
};

/// Source text does not follow the emitted-module grammar.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& message) : Error("format_error", message) {}
};

/// Tape contains a symbol outside {0, 1}.
class EncodingError : public Error {
public:
    explicit EncodingError(const std::string& message) : Error("encoding_error", message) {}
};

/// Malformed JSON input document.
class InputError : public Error {
public:
    explicit InputError(const std::string& message) : Error("input_error", message) {}
};

}  // namespace vulnfactory

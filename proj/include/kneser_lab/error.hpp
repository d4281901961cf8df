#pragma once

#include <stdexcept>
#include <string>

namespace kneser_lab {

enum class ErrorKind {
    precondition,  // caller violated an operation's contract
    format,        // malformed text/JSON input
    budget,        // enumeration cap exceeded
    internal,      // a proven invariant failed; always a bug
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::format: return "format";
        case ErrorKind::budget: return "budget";
        case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

/// Single exception type for the library; `kind()` lets the CLI pick an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, const std::string& what) {
    if (!condition) fail(ErrorKind::precondition, what);
}

inline void ensure(bool condition, const std::string& what) {
    if (!condition) fail(ErrorKind::internal, "internal invariant violated: " + what);
}

}  // namespace kneser_lab

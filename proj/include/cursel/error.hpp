#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cursel {

enum class ErrorKind {
    InvalidInput,
    NumericalFailure,
    IndexError,
    NotOrthonormal,
    ConfigError,
    IoError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidInput:     return "InvalidInput";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::IndexError:       return "IndexError";
    case ErrorKind::NotOrthonormal:   return "NotOrthonormal";
    case ErrorKind::ConfigError:      return "ConfigError";
    case ErrorKind::IoError:          return "IoError";
    }
    return "Unknown";
}

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what)
{
    throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what)
{
    if (!condition)
        fail(kind, what);
}

} // namespace cursel

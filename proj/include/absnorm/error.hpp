#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace absnorm {

enum class ErrorKind {
    NonFinite,
    NotSquare,
    ShapeMismatch,
    EmptyTuple,
    NotHermitian,
    NotPSD,
    NotContraction,
    AllZeroTuple,
    SOutOfRange,
    DomainError,
    PTooSmall,
    NoConvergence,
    UnsortedInput,
    MalformedFile,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every contract violation in the library surfaces as this exception.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace absnorm

#include "absnorm/error.hpp"

namespace absnorm {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::EmptyTuple: return "EmptyTuple";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NotContraction: return "NotContraction";
    case ErrorKind::AllZeroTuple: return "AllZeroTuple";
    case ErrorKind::SOutOfRange: return "SOutOfRange";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::PTooSmall: return "PTooSmall";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::UnsortedInput: return "UnsortedInput";
    case ErrorKind::MalformedFile: return "MalformedFile";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace absnorm

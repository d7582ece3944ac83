#pragma once

#include <stdexcept>
#include <string>

namespace spinal {

enum class ErrorKind {
    ZeroInverse,
    DimensionMismatch,
    NotPrime,
    NotOdd,
    PrimeTooLarge,
    BadVectorLength,
    BadEntry,
    DependentVectors,
    AllEmpty,
    UnknownGenerator,
    SyntaxError,
    MalformedDocument,
    DepthBoundExceeded,
    ClosureBoundExceeded,
    NoValidConjugator,
    IterationBoundExceeded,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroInverse: return "ZeroInverse";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::NotOdd: return "NotOdd";
        case ErrorKind::PrimeTooLarge: return "PrimeTooLarge";
        case ErrorKind::BadVectorLength: return "BadVectorLength";
        case ErrorKind::BadEntry: return "BadEntry";
        case ErrorKind::DependentVectors: return "DependentVectors";
        case ErrorKind::AllEmpty: return "AllEmpty";
        case ErrorKind::UnknownGenerator: return "UnknownGenerator";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::MalformedDocument: return "MalformedDocument";
        case ErrorKind::DepthBoundExceeded: return "DepthBoundExceeded";
        case ErrorKind::ClosureBoundExceeded: return "ClosureBoundExceeded";
        case ErrorKind::NoValidConjugator: return "NoValidConjugator";
        case ErrorKind::IterationBoundExceeded: return "IterationBoundExceeded";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Bound errors signal resource limits rather than bad input.
    bool is_bound_error() const noexcept {
        return kind_ == ErrorKind::DepthBoundExceeded ||
               kind_ == ErrorKind::ClosureBoundExceeded ||
               kind_ == ErrorKind::IterationBoundExceeded;
    }

private:
    ErrorKind kind_;
};

}  // namespace spinal

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smolab {

enum class ErrorCode {
    // group-characters
    ClosureExceedsLimit,
    InvalidPermutation,
    NumericalDegeneracy,
    ClassMismatch,
    LemmaViolation,
    DegreeMismatch,
    UnknownCatalogEntry,
    // prime-streams
    LimitExceeded,
    Ramified,
    InvalidFieldSpec,
    InvalidSelector,
    // euler-products
    PoleHit,
    NormMismatch,
    NotPositiveType,
    UnknownProfile,
    // smo-lab
    ParseError,
    NonPrimeRow,
    DuplicatePrime,
    InfeasibleEpsilon,
    NotTempered,
    NotPrimeDegree,
    NotNested,
    // general
    InvalidArgument,
    // cli
    UsageError,
    IoError,
};

std::string_view error_code_name(ErrorCode code);

/// Domain error carrying a machine-readable code. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace smolab

#include "smolab/error.hpp"

namespace smolab {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ClosureExceedsLimit: return "ClosureExceedsLimit";
        case ErrorCode::InvalidPermutation: return "InvalidPermutation";
        case ErrorCode::NumericalDegeneracy: return "NumericalDegeneracy";
        case ErrorCode::ClassMismatch: return "ClassMismatch";
        case ErrorCode::LemmaViolation: return "LemmaViolation";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::UnknownCatalogEntry: return "UnknownCatalogEntry";
        case ErrorCode::LimitExceeded: return "LimitExceeded";
        case ErrorCode::Ramified: return "Ramified";
        case ErrorCode::InvalidFieldSpec: return "InvalidFieldSpec";
        case ErrorCode::InvalidSelector: return "InvalidSelector";
        case ErrorCode::PoleHit: return "PoleHit";
        case ErrorCode::NormMismatch: return "NormMismatch";
        case ErrorCode::NotPositiveType: return "NotPositiveType";
        case ErrorCode::UnknownProfile: return "UnknownProfile";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NonPrimeRow: return "NonPrimeRow";
        case ErrorCode::DuplicatePrime: return "DuplicatePrime";
        case ErrorCode::InfeasibleEpsilon: return "InfeasibleEpsilon";
        case ErrorCode::NotTempered: return "NotTempered";
        case ErrorCode::NotPrimeDegree: return "NotPrimeDegree";
        case ErrorCode::NotNested: return "NotNested";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::UsageError: return "UsageError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace smolab

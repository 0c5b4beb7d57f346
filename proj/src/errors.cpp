#include "ainf/errors.hpp"

namespace ainf {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::Inhomogeneous: return "Inhomogeneous";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::ModuleMismatch: return "ModuleMismatch";
        case ErrorCode::NotADifferential: return "NotADifferential";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::LeibnizFailure: return "LeibnizFailure";
        case ErrorCode::NotACocycle: return "NotACocycle";
        case ErrorCode::RangeViolation: return "RangeViolation";
        case ErrorCode::NotAComplex: return "NotAComplex";
        case ErrorCode::NotChainMap: return "NotChainMap";
        case ErrorCode::NotFiltrationPreserving: return "NotFiltrationPreserving";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::UnknownFixture: return "UnknownFixture";
    }
    return "Error";
}

}  // namespace ainf

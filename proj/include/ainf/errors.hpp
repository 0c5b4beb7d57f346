#pragma once

#include <stdexcept>
#include <string>

namespace ainf {

enum class ErrorCode {
    ZeroElement,
    Inhomogeneous,
    IndexOutOfRange,
    ArityMismatch,
    ModuleMismatch,
    NotADifferential,
    NotAssociative,
    LeibnizFailure,
    NotACocycle,
    RangeViolation,
    NotAComplex,
    NotChainMap,
    NotFiltrationPreserving,
    SyntaxError,
    UnknownName,
    DegreeMismatch,
    NotPrime,
    UnknownFixture,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ainf

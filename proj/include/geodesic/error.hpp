#pragma once

#include <stdexcept>
#include <string>

namespace geodesic {

enum class ErrorKind {
    NotPrime,
    ReduciblePolynomial,
    NotQuadraticExtension,
    DimensionOutOfRange,
    BadDimension,
    SingularMatrix,
    DegreeMismatch,
    NonBijectiveImage,
    PointOutOfRange,
    DegreeTooSmall,
    NotASubgroup,
    IndexOverflow,
    FamilyNotInvariant,
    GeneratorFileInvalid,
    GeneratorSearchFailed,
    GroupCertificateFailed,
    OrbitLengthUnexpected,
    TrivialDesign,
    NotUniformReplication,
    PairCountVaries,
    NotADesign,
    DuplicateBlock,
    BlockOutOfRange,
    TimeBudgetExceeded,
    BudgetExceeded,
    NotTransitive,
    PreconditionFailed,
    NotSimple,
    NotA2Design,
    NotFlagTransitive,
    IsomorphismFailed,
    GroupDoesNotActOnDesign,
    EmptyDesign,
    InvariantViolated,
    ParameterMismatch,
    ParseError,
    IoError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

} // namespace geodesic

/*
   Copyright 2026 the spirs authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SPIRS_ERRORS_HPP
#define SPIRS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spirs {

enum class Errc {
    // field construction / arithmetic
    NonPrimeModulus,
    ReducibleReductionPoly,
    UnsupportedSize,
    MixedFields,
    DivisionByZero,
    InvalidElement,
    // polynomial operations
    DivisionByZeroPoly,
    TargetDegreeTooSmall,
    NotInvertibleAtZero,
    ZeroPolynomial,
    // SPI instances and transformations
    BadDegreeRelation,
    TauOutOfRange,
    EmptyInstance,
    ZeroLambda,
    InstanceTooLargeForOracle,
    NonPositiveU,
    PreconditionViolated,
    // solvers
    NonMonomialModulus,
    InvalidInstance,
    MissingCounter,
    AssertionFired,
    // codec
    DuplicateEvalPoint,
    DimensionOutOfRange,
    KMaxNotLessThanN,
    MessageDegreeTooHigh,
    InexactDivision,
    DegreeOverflow,
    LocatorNotValidated,
    // analysis
    TOutOfRange,
    RankOutOfRange,
    LNotGreaterThanOne,
    // I/O
    ParseError,
    IoError,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPrimeModulus: return "NonPrimeModulus";
        case Errc::ReducibleReductionPoly: return "ReducibleReductionPoly";
        case Errc::UnsupportedSize: return "UnsupportedSize";
        case Errc::MixedFields: return "MixedFields";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::InvalidElement: return "InvalidElement";
        case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case Errc::TargetDegreeTooSmall: return "TargetDegreeTooSmall";
        case Errc::NotInvertibleAtZero: return "NotInvertibleAtZero";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::BadDegreeRelation: return "BadDegreeRelation";
        case Errc::TauOutOfRange: return "TauOutOfRange";
        case Errc::EmptyInstance: return "EmptyInstance";
        case Errc::ZeroLambda: return "ZeroLambda";
        case Errc::InstanceTooLargeForOracle: return "InstanceTooLargeForOracle";
        case Errc::NonPositiveU: return "NonPositiveU";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::NonMonomialModulus: return "NonMonomialModulus";
        case Errc::InvalidInstance: return "InvalidInstance";
        case Errc::MissingCounter: return "MissingCounter";
        case Errc::AssertionFired: return "AssertionFired";
        case Errc::DuplicateEvalPoint: return "DuplicateEvalPoint";
        case Errc::DimensionOutOfRange: return "DimensionOutOfRange";
        case Errc::KMaxNotLessThanN: return "KMaxNotLessThanN";
        case Errc::MessageDegreeTooHigh: return "MessageDegreeTooHigh";
        case Errc::InexactDivision: return "InexactDivision";
        case Errc::DegreeOverflow: return "DegreeOverflow";
        case Errc::LocatorNotValidated: return "LocatorNotValidated";
        case Errc::TOutOfRange: return "TOutOfRange";
        case Errc::RankOutOfRange: return "RankOutOfRange";
        case Errc::LNotGreaterThanOne: return "LNotGreaterThanOne";
        case Errc::ParseError: return "ParseError";
        case Errc::IoError: return "IoError";
    }
    return "UnknownError";
}

/// Exception type used throughout the library. Carries a machine-checkable
/// error code plus a human-readable message; `index()` identifies the
/// offending constraint/row where that is meaningful (-1 otherwise).
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what, long index = -1)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), index_(index) {}

    Errc code() const noexcept { return code_; }
    long index() const noexcept { return index_; }

   private:
    Errc code_;
    long index_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what, long index = -1) {
    throw Error(code, what, index);
}

}  // namespace spirs

#endif  // SPIRS_ERRORS_HPP

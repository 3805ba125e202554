#include "p3/error.hpp"

namespace p3 {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::WholeAlgebra: return "WholeAlgebra";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::IncompatiblePrime: return "IncompatiblePrime";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::RewriteCapExceeded: return "RewriteCapExceeded";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::PolynomialNotSatisfied: return "PolynomialNotSatisfied";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::QuotientNotSemisimpleEvidence: return "QuotientNotSemisimpleEvidence";
    case ErrorCode::IdempotentsNotPrimitive: return "IdempotentsNotPrimitive";
    case ErrorCode::TableMismatch: return "TableMismatch";
    case ErrorCode::NonHomogeneousRelation: return "NonHomogeneousRelation";
    case ErrorCode::TauAxiomViolation: return "TauAxiomViolation";
    case ErrorCode::NotAModule: return "NotAModule";
    case ErrorCode::FreenessNotVerified: return "FreenessNotVerified";
    case ErrorCode::ClaimMismatch: return "ClaimMismatch";
    case ErrorCode::HopfDataUnavailable: return "HopfDataUnavailable";
    case ErrorCode::IntegralDimensionNot1: return "IntegralDimensionNot1";
    case ErrorCode::SearchInconclusive: return "SearchInconclusive";
    case ErrorCode::NoFrobeniusFormFound: return "NoFrobeniusFormFound";
    case ErrorCode::ScalePolicy: return "ScalePolicy";
    case ErrorCode::PrerequisitesUnavailable: return "PrerequisitesUnavailable";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace p3

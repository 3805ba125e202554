#pragma once

#include <stdexcept>
#include <string>

namespace p3 {

enum class ErrorCode {
  NonPrime,
  InvalidDegree,
  ShapeMismatch,
  NotAnIdeal,
  WholeAlgebra,
  NotIdempotent,
  IncompatiblePrime,
  InvalidParams,
  RewriteCapExceeded,
  CertificateFailure,
  PolynomialNotSatisfied,
  NotNilpotent,
  QuotientNotSemisimpleEvidence,
  IdempotentsNotPrimitive,
  TableMismatch,
  NonHomogeneousRelation,
  TauAxiomViolation,
  NotAModule,
  FreenessNotVerified,
  ClaimMismatch,
  HopfDataUnavailable,
  IntegralDimensionNot1,
  SearchInconclusive,
  NoFrobeniusFormFound,
  ScalePolicy,
  PrerequisitesUnavailable,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace p3

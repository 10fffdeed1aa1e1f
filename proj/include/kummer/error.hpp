#pragma once

#include <stdexcept>
#include <string>

namespace kummer {

/// Error conditions surfaced by the library. Every throw site uses one of
/// these codes so callers (CLI, test suites) can map failures to exit codes
/// without string matching.
enum class Err {
  NotPrime,
  ReducibleModulus,
  NoGeneratorFound,
  MixedFields,
  DivisionByZero,
  KummerHypothesisViolated,
  DeskBoundExceeded,
  NotMonic,
  DivisionByZeroPoly,
  ZeroPolynomial,
  UnsupportedPrime,
  IncompatibleLattices,
  WildPrime,
  ZeroInput,
  NotApplicable,
  ScopeViolation,
  EmptyFactorization,
  InternalInconsistency,
  SharedFactor,
  EnumerationBoundExceeded,
  SchemaError,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::NotPrime: return "NotPrime";
    case Err::ReducibleModulus: return "ReducibleModulus";
    case Err::NoGeneratorFound: return "NoGeneratorFound";
    case Err::MixedFields: return "MixedFields";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::KummerHypothesisViolated: return "KummerHypothesisViolated";
    case Err::DeskBoundExceeded: return "DeskBoundExceeded";
    case Err::NotMonic: return "NotMonic";
    case Err::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Err::ZeroPolynomial: return "ZeroPolynomial";
    case Err::UnsupportedPrime: return "UnsupportedPrime";
    case Err::IncompatibleLattices: return "IncompatibleLattices";
    case Err::WildPrime: return "WildPrime";
    case Err::ZeroInput: return "ZeroInput";
    case Err::NotApplicable: return "NotApplicable";
    case Err::ScopeViolation: return "ScopeViolation";
    case Err::EmptyFactorization: return "EmptyFactorization";
    case Err::InternalInconsistency: return "InternalInconsistency";
    case Err::SharedFactor: return "SharedFactor";
    case Err::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case Err::SchemaError: return "SchemaError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Err code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace kummer

#pragma once

#include <stdexcept>
#include <string>

namespace ordfor {

enum class Err {
  CoverOrderViolation,
  RedundantCover,
  IntervalViolation,
  RankOutOfBounds,
  BoundaryMismatch,
  NotUnary,
  IntervalViolationAfterContraction,
  NotACocone,
  IndexMismatch,
  DimensionMismatch,
  NotAComplex,
  NotChainMap,
  SimplicialIdentityViolation,
  NotNatural,
  FunctorLawViolation,
  NotACone,
  MalformedInput,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::CoverOrderViolation: return "CoverOrderViolation";
    case Err::RedundantCover: return "RedundantCover";
    case Err::IntervalViolation: return "IntervalViolation";
    case Err::RankOutOfBounds: return "RankOutOfBounds";
    case Err::BoundaryMismatch: return "BoundaryMismatch";
    case Err::NotUnary: return "NotUnary";
    case Err::IntervalViolationAfterContraction:
      return "IntervalViolationAfterContraction";
    case Err::NotACocone: return "NotACocone";
    case Err::IndexMismatch: return "IndexMismatch";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NotAComplex: return "NotAComplex";
    case Err::NotChainMap: return "NotChainMap";
    case Err::SimplicialIdentityViolation: return "SimplicialIdentityViolation";
    case Err::NotNatural: return "NotNatural";
    case Err::FunctorLawViolation: return "FunctorLawViolation";
    case Err::NotACone: return "NotACone";
    case Err::MalformedInput: return "MalformedInput";
  }
  return "UnknownError";
}

// All library failures carry a typed kind plus an optional witness
// (a rank, a degree, or another small index, -1 when absent).
class Error : public std::runtime_error {
public:
  Error(Err kind, const std::string& msg, long witness = -1)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg),
        kind_(kind),
        witness_(witness) {}

  Err kind() const { return kind_; }
  long witness() const { return witness_; }

private:
  Err kind_;
  long witness_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg,
                              long witness = -1) {
  throw Error(kind, msg, witness);
}

}  // namespace ordfor

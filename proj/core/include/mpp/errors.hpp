#pragma once

#include <stdexcept>
#include <string>

namespace mpp {

/// Domain-error codes shared by the whole toolkit.
enum class Err {
  OddOrthogonalMultiplicity,
  UnpairedNonSelfDual,
  OddTotalDimension,
  BadA,
  BadMultiplicity,
  BadLabel,
  NotEvaluable,
  PoleAtHalf,
  ExactDivision,
  IndexOutOfRange,
  NotNormalizing,
  InvalidSignature,
  IncompleteTable,
  BlockNotPresent,
  ChoiceInvalid,
  NotBounded,
  NotDiscrete,
  OutsideBlock,
  RankBound,
  Syntax,
};

inline const char* errName(Err e) {
  switch (e) {
    case Err::OddOrthogonalMultiplicity: return "OddOrthogonalMultiplicity";
    case Err::UnpairedNonSelfDual: return "UnpairedNonSelfDual";
    case Err::OddTotalDimension: return "OddTotalDimension";
    case Err::BadA: return "BadA";
    case Err::BadMultiplicity: return "BadMultiplicity";
    case Err::BadLabel: return "BadLabel";
    case Err::NotEvaluable: return "NotEvaluable";
    case Err::PoleAtHalf: return "PoleAtHalf";
    case Err::ExactDivision: return "ExactDivision";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::NotNormalizing: return "NotNormalizing";
    case Err::InvalidSignature: return "InvalidSignature";
    case Err::IncompleteTable: return "IncompleteTable";
    case Err::BlockNotPresent: return "BlockNotPresent";
    case Err::ChoiceInvalid: return "ChoiceInvalid";
    case Err::NotBounded: return "NotBounded";
    case Err::NotDiscrete: return "NotDiscrete";
    case Err::OutsideBlock: return "OutsideBlock";
    case Err::RankBound: return "RankBound";
    case Err::Syntax: return "Syntax";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(errName(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace mpp

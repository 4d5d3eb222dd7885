#pragma once

#include <stdexcept>
#include <string>

namespace mwdp {

enum class ErrorCode {
  Parse,
  DuplicateVertex,
  UnknownVertex,
  DuplicateArc,
  SelfLoop,
  NegativeCost,
  UnknownMatrix,
  KindViolation,
  EmptyFamily,
  PreconditionViolated,
  HardInstanceTooLarge,
  TooLarge,
  HypothesisViolated,
  NotLinear,
  BadHyperedge,
  NonIntegralRecovery,
  NegativeK,
  NoEdges,
  BadColor,
  NegativeWeight,
  BadTerminals,
  Internal,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NegativeCost: return "NegativeCost";
    case ErrorCode::UnknownMatrix: return "UnknownMatrix";
    case ErrorCode::KindViolation: return "KindViolation";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::HardInstanceTooLarge: return "HardInstanceTooLarge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::BadHyperedge: return "BadHyperedge";
    case ErrorCode::NonIntegralRecovery: return "NonIntegralRecovery";
    case ErrorCode::NegativeK: return "NegativeK";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::BadColor: return "BadColor";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::BadTerminals: return "BadTerminals";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mwdp

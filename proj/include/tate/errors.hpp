#pragma once

#include <stdexcept>
#include <string>

namespace tate {

enum class ErrorCode {
  ParseError,
  UnknownSymbol,
  InhomogeneousEntry,
  BoundTooSmall,
  TruncationInsufficient,
  WindowNotComputed,
  WindowViolation,
  WindowTooNarrow,
  VerificationFailed,
  NotAComplex,
  CorrectionUnsolvable,
  RoundtripMismatch,
  NotFree,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::InhomogeneousEntry: return "InhomogeneousEntry";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorCode::WindowNotComputed: return "WindowNotComputed";
    case ErrorCode::WindowViolation: return "WindowViolation";
    case ErrorCode::WindowTooNarrow: return "WindowTooNarrow";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::CorrectionUnsolvable: return "CorrectionUnsolvable";
    case ErrorCode::RoundtripMismatch: return "RoundtripMismatch";
    case ErrorCode::NotFree: return "NotFree";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tate

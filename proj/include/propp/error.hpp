#pragma once

#include <stdexcept>
#include <string>

namespace propp {

enum class ErrorKind {
  NonIntegerDilation,
  EmptySet,
  InvalidInstance,
  ParseError,
  NotPropertyP,
  TheoremCounterexample,
  ContainerMismatch,
  CoprimalityViolation,
  HypothesisViolation,
  InjectivityViolation,
  IncidenceViolation,
  DisjointnessViolation,
  SizeIdentityViolation,
  PreconditionViolation,
  TooLarge,
  InvalidConfig,
  Overflow,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonIntegerDilation: return "NonIntegerDilation";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotPropertyP: return "NotPropertyP";
    case ErrorKind::TheoremCounterexample: return "TheoremCounterexample";
    case ErrorKind::ContainerMismatch: return "ContainerMismatch";
    case ErrorKind::CoprimalityViolation: return "CoprimalityViolation";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::InjectivityViolation: return "InjectivityViolation";
    case ErrorKind::IncidenceViolation: return "IncidenceViolation";
    case ErrorKind::DisjointnessViolation: return "DisjointnessViolation";
    case ErrorKind::SizeIdentityViolation: return "SizeIdentityViolation";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace propp

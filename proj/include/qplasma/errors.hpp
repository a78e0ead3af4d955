#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qplasma {

enum class ErrorCode {
  PoleAtBranchPoint,
  NonUpperHalfPlane,
  DegenerateQ,
  DenominatorVanishes,
  StaticDenominatorVanishes,
  DivisionByZeroFrequency,
  NonFinite,
  InvalidArgument,
  ZeroWavenumber,
  InconsistentParams,
  ToleranceNotReached,
  PoleOnContour,
  WindowContainsPole,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PoleAtBranchPoint: return "PoleAtBranchPoint";
    case ErrorCode::NonUpperHalfPlane: return "NonUpperHalfPlane";
    case ErrorCode::DegenerateQ: return "DegenerateQ";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::StaticDenominatorVanishes: return "StaticDenominatorVanishes";
    case ErrorCode::DivisionByZeroFrequency: return "DivisionByZeroFrequency";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroWavenumber: return "ZeroWavenumber";
    case ErrorCode::InconsistentParams: return "InconsistentParams";
    case ErrorCode::ToleranceNotReached: return "ToleranceNotReached";
    case ErrorCode::PoleOnContour: return "PoleOnContour";
    case ErrorCode::WindowContainsPole: return "WindowContainsPole";
  }
  return "Unknown";
}

/// Base of every error raised by the library. Catch this to handle any
/// evaluation failure, or one of the typed aliases below to handle one kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

template <ErrorCode C>
class TypedError : public Error {
 public:
  explicit TypedError(const std::string& message) : Error(C, message) {}
};

using PoleAtBranchPoint = TypedError<ErrorCode::PoleAtBranchPoint>;
using NonUpperHalfPlane = TypedError<ErrorCode::NonUpperHalfPlane>;
using DegenerateQ = TypedError<ErrorCode::DegenerateQ>;
using DenominatorVanishes = TypedError<ErrorCode::DenominatorVanishes>;
using StaticDenominatorVanishes = TypedError<ErrorCode::StaticDenominatorVanishes>;
using DivisionByZeroFrequency = TypedError<ErrorCode::DivisionByZeroFrequency>;
using NonFinite = TypedError<ErrorCode::NonFinite>;
using InvalidArgument = TypedError<ErrorCode::InvalidArgument>;
using ZeroWavenumber = TypedError<ErrorCode::ZeroWavenumber>;
using InconsistentParams = TypedError<ErrorCode::InconsistentParams>;
using ToleranceNotReached = TypedError<ErrorCode::ToleranceNotReached>;
using PoleOnContour = TypedError<ErrorCode::PoleOnContour>;
using WindowContainsPole = TypedError<ErrorCode::WindowContainsPole>;

}  // namespace qplasma

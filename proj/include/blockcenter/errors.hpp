#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blockcenter {

enum class ErrorKind {
  SingularMatrix,
  NotPositiveDefinite,
  NoSolution,
  NotIntegral,
  DimensionMismatch,
  OrthogonalityViolation,
  NonIntegralDiagonal,
  UnitNotInLattice,
  WrongDimension,
  NotPresentedLocal,
  OddCharacteristic,
  NotSymmetric,
  FormNotSymmetrizing,
  NotInRadical,
  DataFileMissing,
  ParseError,
  InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OrthogonalityViolation: return "OrthogonalityViolation";
    case ErrorKind::NonIntegralDiagonal: return "NonIntegralDiagonal";
    case ErrorKind::UnitNotInLattice: return "UnitNotInLattice";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::NotPresentedLocal: return "NotPresentedLocal";
    case ErrorKind::OddCharacteristic: return "OddCharacteristic";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::FormNotSymmetrizing: return "FormNotSymmetrizing";
    case ErrorKind::NotInRadical: return "NotInRadical";
    case ErrorKind::DataFileMissing: return "DataFileMissing";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace blockcenter

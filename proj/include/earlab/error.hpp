#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace earlab {

enum class ErrorKind {
  CycleDetected,
  NotGraded,
  DanglingCover,
  NotComparable,
  EmptySelection,
  UnknownElement,
  NotALattice,
  SizeLimit,
  NotSimple,
  NotMChain,
  LabelingInvalid,
  ExchangeAxiomFailed,
  Inconsistent,
  NotPure,
  NotShelling,
  NotCertified,
  NotGeometric,
  MobiusMismatch,
  NonzeroMobiusViolated,
  TopRankSelected,
  LengthMismatch,
  RangeError,
  NotBall,
  BadParams,
  Schema,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::DanglingCover: return "DanglingCover";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::EmptySelection: return "EmptySelection";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotMChain: return "NotMChain";
    case ErrorKind::LabelingInvalid: return "LabelingInvalid";
    case ErrorKind::ExchangeAxiomFailed: return "ExchangeAxiomFailed";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotShelling: return "NotShelling";
    case ErrorKind::NotCertified: return "NotCertified";
    case ErrorKind::NotGeometric: return "NotGeometric";
    case ErrorKind::MobiusMismatch: return "MobiusMismatch";
    case ErrorKind::NonzeroMobiusViolated: return "NonzeroMobiusViolated";
    case ErrorKind::TopRankSelected: return "TopRankSelected";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::NotBall: return "NotBall";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by verify_shelling; (first, second) are positions in the proposed order.
class NotShellingError : public Error {
 public:
  NotShellingError(std::size_t first, std::size_t second, const std::string& what)
      : Error(ErrorKind::NotShelling, what), first_(first), second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

}  // namespace earlab

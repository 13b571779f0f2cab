#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sylowkit {

using elem = std::uint32_t;

/// Named integer fields describing a counterexample or the location of a failure.
using Witness = std::vector<std::pair<std::string, std::int64_t>>;

enum class ErrorKind {
  CarrierMismatch,
  OutOfRange,
  MalformedTable,
  NoIdentity,
  NoInverse,
  NonAssociative,
  Unsupported,
  ParseError,
  InvalidSubgroup,
  NotNormal,
  NotBijective,
  NotMorphism,
  NotPrime,
  NotPPower,
  DoesNotDivide,
  PDoesNotDivide,
  BadBase,
  BadArg,
  FamilyNotClosed,
  PreconditionViolation,
  InternalInvariant,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidSubgroup: return "InvalidSubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::NotMorphism: return "NotMorphism";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotPPower: return "NotPPower";
    case ErrorKind::DoesNotDivide: return "DoesNotDivide";
    case ErrorKind::PDoesNotDivide: return "PDoesNotDivide";
    case ErrorKind::BadBase: return "BadBase";
    case ErrorKind::BadArg: return "BadArg";
    case ErrorKind::FamilyNotClosed: return "FamilyNotClosed";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

/// The single exception type thrown by the library. `kind()` classifies the
/// failure and `witness()` carries the offending indices, e.g. the first
/// non-associative triple.
class error : public std::runtime_error {
 public:
  error(ErrorKind kind, std::string const& message, Witness witness = {})
      : std::runtime_error(format(kind, message, witness)),
        kind_(kind),
        witness_(std::move(witness)) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] Witness const& witness() const noexcept { return witness_; }

 private:
  static std::string format(ErrorKind kind, std::string const& message,
                            Witness const& witness) {
    std::ostringstream os;
    os << to_string(kind) << ": " << message;
    if (!witness.empty()) {
      os << " [";
      for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) os << ", ";
        os << witness[i].first << '=' << witness[i].second;
      }
      os << ']';
    }
    return os.str();
  }

  ErrorKind kind_;
  Witness witness_;
};

}  // namespace sylowkit

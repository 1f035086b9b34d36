#include "entred/error.hpp"

namespace entred {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::NegativeMass: return "NegativeMass";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::BadM: return "BadM";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::ZeroMinimum: return "ZeroMinimum";
    case ErrorKind::RatioViolated: return "RatioViolated";
    case ErrorKind::BadRho: return "BadRho";
    case ErrorKind::MarginalMismatch: return "MarginalMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace entred

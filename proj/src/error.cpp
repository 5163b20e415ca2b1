#include "rauzy/error.hpp"

namespace rauzy {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NoSeedFound: return "NoSeedFound";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::DivideByZeroPoly: return "DivideByZeroPoly";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::IndeterminateClassification: return "IndeterminateClassification";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::MatrixMismatch: return "MatrixMismatch";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

}  // namespace rauzy

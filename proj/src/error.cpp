#include "sftcd/error.hpp"

namespace sftcd {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::InvalidBlock: return "InvalidBlock";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::NotFiniteToOne: return "NotFiniteToOne";
    case ErrorKind::EmptyFiber: return "EmptyFiber";
    case ErrorKind::NotRoutable: return "NotRoutable";
    case ErrorKind::ImageMismatch: return "ImageMismatch";
    case ErrorKind::NoFixedPoint: return "NoFixedPoint";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace sftcd

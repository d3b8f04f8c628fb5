#include "fact/error.hpp"

namespace fact {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotALattice: return "NotALattice";
    case Errc::NotBounded: return "NotBounded";
    case Errc::BadInterval: return "BadInterval";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::NotAnOmp: return "NotAnOmp";
    case Errc::NotAnOa: return "NotAnOa";
    case Errc::MissingMeet: return "MissingMeet";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::EmptySet: return "EmptySet";
    case Errc::FormatError: return "FormatError";
    case Errc::UsageError: return "UsageError";
  }
  return "Error";
}

}  // namespace fact

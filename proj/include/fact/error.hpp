#pragma once

#include <stdexcept>
#include <string>

namespace fact {

enum class Errc {
  NotALattice,
  NotBounded,
  BadInterval,
  LimitExceeded,
  NotAnOmp,
  NotAnOa,
  MissingMeet,
  SizeLimit,
  NotIdempotent,
  SizeMismatch,
  PreconditionFailed,
  EmptySet,
  FormatError,
  UsageError,
};

const char* errc_name(Errc c);

/// Error with a machine-checkable code; the message carries the witness.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace fact

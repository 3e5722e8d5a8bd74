#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tonegroup {

enum class Errc {
  EmptyChord,
  FirstToneNotZero,
  NotStrictlyIncreasing,
  ToneOutOfRange,
  InvalidSize,
  InvalidComposition,
  InvalidPartition,
  WrongArity,
  ParseError,
  IsomorphismViolation,
};

std::string_view to_string(Errc code);

/// Raised by every validating entry point; `code()` tells callers which
/// contract was broken (the CLI maps it onto an exit status).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tonegroup

#pragma once

#include <stdexcept>
#include <string>

namespace utt {

enum class Errc {
  NotPrime,
  NotPrimitive,
  BadPrecision,
  ContextMismatch,
  NotAUnit,
  NotIntegral,
  NotInvertible,
  SizeMismatch,
  PrecisionExhausted,
  BadIndex,
  Overflow,
  ParseError,
};

const char* errc_name(Errc code) noexcept;

/// Every recoverable failure in the library is reported as an Error carrying
/// one of the codes above; the message names the offending values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

  /// Configuration errors map to CLI exit status 2.
  bool is_configuration_error() const noexcept {
    return code_ == Errc::NotPrime || code_ == Errc::NotPrimitive ||
           code_ == Errc::BadPrecision;
  }

 private:
  Errc code_;
};

}  // namespace utt

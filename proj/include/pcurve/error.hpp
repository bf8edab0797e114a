#ifndef PCURVE_ERROR_HPP
#define PCURVE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcurve {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  FieldMismatch,
  RingMismatch,
  NotAPthPower,
  NotHomogeneous,
  ArityMismatch,
  InconsistentBasis,
  ZeroPartialFy,
  BasisEscape,
  InsufficientPrecision,
  UnsupportedCharacteristic,
  BasisVerificationFailed,
  ImageEscapesSpan,
  InconsistentInvariants,
  SearchSpaceTooLarge,
  SyntaxError,
  UnboundIdentifier,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure at a 0-based character offset of the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError,
              "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pcurve

#endif  // PCURVE_ERROR_HPP

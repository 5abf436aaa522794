#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace psdcert {

enum class ErrorCode {
  NotSquare,
  NotHermitian,
  NonFiniteEntry,
  ImaginaryResidue,
  DivergentRecursion,
  ConstructionMismatch,
  InvalidPolynomial,
  WrongDimension,
  DimensionTooLarge,
  NoConvergence,
  PreconditionViolated,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::PreconditionViolated, what);
}

}  // namespace psdcert

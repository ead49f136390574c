#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecr {

enum class Errc {
  ZeroConstantTerm,
  NonUnitConstant,
  NonzeroInnerConstant,
  NotRevertible,
  SingularCurve,
  PointNotOnCurve,
  InsufficientOrder,
  InvalidStepSet,
  SearchSpaceTooLarge,
  InsufficientTerms,
  ZeroLambda,
  TorsionDepth,
  ZeroXCoordinate,
  InsufficientDepth,
  FormulaDomainError,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

// All library failures are reported through this type; code() identifies the
// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ecr

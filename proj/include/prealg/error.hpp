#pragma once

#include <stdexcept>
#include <string>

namespace prealg {

enum class Errc {
  DomainMismatch,
  DimensionMismatch,
  ShapeMismatch,
  AmbientMismatch,
  NonFieldDomain,
  TwoNotInvertible,
  TwoTorsionDomain,
  TwoTorsionTarget,
  BudgetExceeded,
  NotAPreMorphism,
  NotPreIdeal,
  NotPreSubalgebra,
  NotIdeal,
  NotGeneralizedIdeal,
  NotClosed,
  NotIdempotentOfKind,
  InvalidPair,
  KindMismatch,
  ParamConstraintViolated,
  ParseError,
  InvalidArgument,
  Internal,
};

/// Library-wide exception. The code drives CLI exit status mapping.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc code);

}  // namespace prealg

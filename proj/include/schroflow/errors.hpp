#pragma once

#include <stdexcept>
#include <string>

namespace schroflow {

// All engine failures derive from Error and carry a stable name that the CLI
// reports verbatim (exit code 3).
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define SCHROFLOW_ERROR(NAME)                                        \
  class NAME : public Error {                                        \
   public:                                                           \
    explicit NAME(const std::string& what) : Error(#NAME, what) {}   \
  }

SCHROFLOW_ERROR(ZeroLinearTerm);
SCHROFLOW_ERROR(ResonantMultiplier);
SCHROFLOW_ERROR(NotAFixedPoint);
SCHROFLOW_ERROR(NotAnalytic);
SCHROFLOW_ERROR(UnitMultiplier);
SCHROFLOW_ERROR(UnitS);
SCHROFLOW_ERROR(UnitK);
SCHROFLOW_ERROR(KNotAboveOne);
SCHROFLOW_ERROR(DegenerateK);
SCHROFLOW_ERROR(DomainEscape);
SCHROFLOW_ERROR(ZeroDerivative);
SCHROFLOW_ERROR(NoContraction);
SCHROFLOW_ERROR(InsufficientOrder);
SCHROFLOW_ERROR(OutOfDomain);
SCHROFLOW_ERROR(OutOfInterval);
SCHROFLOW_ERROR(PoleEncountered);
SCHROFLOW_ERROR(ComplexBranch);
SCHROFLOW_ERROR(UnsupportedRegime);
SCHROFLOW_ERROR(QuadratureFailure);
SCHROFLOW_ERROR(ModeMismatch);
SCHROFLOW_ERROR(ParseError);

#undef SCHROFLOW_ERROR

}  // namespace schroflow

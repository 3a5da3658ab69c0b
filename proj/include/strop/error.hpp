#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strop {

enum class ErrorKind {
  Malformed,
  MalformedCarrier,
  AxiomViolation,
  ForeignElement,
  NotMultiplicative,
  NotOrderCompatible,
  BadRank,
  NotHomomorphism,
  GhostSetMismatch,
  HypothesisViolation,
  NotSubsemiring,
  Unsupported,
  LawViolation,
  TargetNotCancellative,
  NotSurjective,
  NotGroupLike,
  DivisionByZeroFunction,
  InfiniteUnsupported,
  NotIdeal,
  NotSubmonoid,
  NotInStabilizer,
  GhostsNotContained,
  TangiblesNotClosed,
  FiberViolation,
  PhiNotOrderCompatible,
  FiberMismatch,
  NotRefinement,
  GhostPartNotIdentity,
  UnsupportedGamma,
  NotSaturated,
  NotProper,
  TooLarge,
  PhiNotHomomorphic,
  NotTE,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

inline void require(bool cond, ErrorKind kind, const std::string& detail) {
  if (!cond) fail(kind, detail);
}

}  // namespace strop

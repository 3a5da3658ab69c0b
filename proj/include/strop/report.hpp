#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strop/error.hpp"

namespace strop {

// Element names (or printed values) that exhibit a failed law.
using Witness = std::vector<std::string>;

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  Witness witness;
  std::uint64_t checked = 0;
  ErrorKind kind = ErrorKind::AxiomViolation;
};

struct ValidationReport {
  std::string subject;
  bool exhaustive = true;
  std::optional<std::uint64_t> seed;
  std::vector<AxiomResult> results;

  bool ok() const;
  const AxiomResult* first_failure() const;
  const AxiomResult* find(const std::string& axiom) const;
  bool passed(const std::string& axiom) const;

  // Records one law. `witness` is empty on success.
  void record(const std::string& axiom, std::uint64_t checked,
              std::optional<Witness> witness,
              ErrorKind kind = ErrorKind::AxiomViolation);

  // Throws Error for the first failed axiom.
  void throw_if_failed() const;
};

}  // namespace strop

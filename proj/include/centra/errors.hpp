#pragma once

#include <stdexcept>
#include <string>

#include "centra/poly.hpp"

namespace centra {

/// Base class for errors that are part of the mathematical contract (as
/// opposed to malformed inputs, which raise std::invalid_argument).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual std::string kind() const { return "DomainError"; }
};

class NotNilpotent : public DomainError {
 public:
  using DomainError::DomainError;
  std::string kind() const override { return "NotNilpotent"; }
};

class NotInCentralizer : public DomainError {
 public:
  using DomainError::DomainError;
  std::string kind() const override { return "NotInCentralizer"; }
};

class NotInMPhi : public DomainError {
 public:
  using DomainError::DomainError;
  std::string kind() const override { return "NotInMPhi"; }
};

class DegreeCapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
  std::string kind() const override { return "DegreeCapExceeded"; }
};

/// The characteristic polynomial does not split into linear factors over
/// the base field. Carries a monic witness factor of degree >= 2 with no
/// root in the field.
class NotSplit : public DomainError {
 public:
  NotSplit(const std::string& message, Poly factor)
      : DomainError(message), factor_(std::move(factor)) {}
  const Poly& factor() const { return factor_; }
  std::string kind() const override { return "NotSplit"; }

 private:
  Poly factor_;
};

}  // namespace centra

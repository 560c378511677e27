#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfq {

// Base of every error raised by the library. The CLI maps these to exit 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid numeric parameter (alpha outside (0,1), a >= R, nu < 1, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Evaluation left the domain of an expression or operator.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ShapeSyntaxError : public Error {
 public:
  ShapeSyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& what);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownIdentifierError : public Error {
 public:
  UnknownIdentifierError(std::size_t offset, std::string name);

  std::size_t offset() const noexcept { return offset_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t offset_;
  std::string name_;
};

// Raised with the canonical text of the subexpression that failed.
class ShapeDomainError : public DomainError {
 public:
  ShapeDomainError(std::string subexpression, const std::string& what);

  const std::string& subexpression() const noexcept { return subexpression_; }

 private:
  std::string subexpression_;
};

// rho = 0 lies in a graph domain although S'(0) != 0 (conical tip).
class AxisSingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The normal offset q reached a focal surface: 1 + q k_i <= 0.
class FocalSurfaceError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Test functions do not satisfy the boundary conditions of the domain.
class BoundaryError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The overlap matrix could not be Cholesky-factored.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace surfq

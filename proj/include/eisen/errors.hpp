#pragma once

#include <stdexcept>
#include <string>

namespace eisen {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Inverting a power series whose constant term vanishes.
class ZeroConstantTerm : public std::domain_error {
 public:
  ZeroConstantTerm() : std::domain_error("series has zero constant term") {}
};

/// Two independent routes to the same object disagree.
class CrossCheckMismatch : public std::runtime_error {
 public:
  CrossCheckMismatch(std::string what, std::size_t index)
      : std::runtime_error(std::move(what)), index_(index) {}
  [[nodiscard]] std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("graded polynomials belong to different rings") {}
};

class NotHomogeneous : public std::invalid_argument {
 public:
  explicit NotHomogeneous(int weight)
      : std::invalid_argument("polynomial is not homogeneous of weight " + std::to_string(weight)) {}
};

class QuasiModularInput : public std::invalid_argument {
 public:
  QuasiModularInput()
      : std::invalid_argument("decomposition needs a modular form in B and C only") {}
};

class SingularSystem : public std::runtime_error {
 public:
  SingularSystem() : std::runtime_error("basis matrix is singular") {}
};

/// Decomposition fitted on the leading coefficients fails further out.
class ResidualMismatch : public std::runtime_error {
 public:
  explicit ResidualMismatch(std::size_t n)
      : std::runtime_error("decomposition residual nonzero at q^" + std::to_string(n)), n_(n) {}
  [[nodiscard]] std::size_t exponent() const { return n_; }

 private:
  std::size_t n_;
};

class UnknownTheoremId : public std::invalid_argument {
 public:
  explicit UnknownTheoremId(const std::string& id)
      : std::invalid_argument("unknown theorem id: " + id) {}
};

class UnknownName : public std::invalid_argument {
 public:
  explicit UnknownName(const std::string& name)
      : std::invalid_argument("unknown series or table: " + name) {}
};

}  // namespace eisen

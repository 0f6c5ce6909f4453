#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperring {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ragged rows, out-of-range indices, empty cells, non-canonical lists.
class MalformedTable : public Error {
 public:
  using Error::Error;
};

class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::array<std::size_t, 3> witness,
                 std::string const& detail);

  std::string const& axiom() const noexcept { return axiom_; }
  std::array<std::size_t, 3> const& witness() const noexcept {
    return witness_;
  }

 private:
  std::string                axiom_;
  std::array<std::size_t, 3> witness_;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class EmptyOperand : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class NotProper : public Error {
 public:
  using Error::Error;
};

class NotWeakly : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class IllDefinedQuotient : public Error {
 public:
  using Error::Error;
};

class NotHomomorphism : public Error {
 public:
  NotHomomorphism(std::size_t x, std::size_t y, std::string const& detail)
      : Error(detail), x_(x), y_(y) {}
  std::size_t x() const noexcept { return x_; }
  std::size_t y() const noexcept { return y_; }

 private:
  std::size_t x_;
  std::size_t y_;
};

class HypothesisUnmet : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperring

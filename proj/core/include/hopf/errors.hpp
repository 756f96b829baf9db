#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

// Base of every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic between scalars (or matrices) living in different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Extended-gcd inversion in Q(zeta_N) did not produce a unit.
class MalformedScalar : public Error {
 public:
  using Error::Error;
};

class ScalarParseError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
  using Error::Error;
};

class NoSolution : public Error {
 public:
  NoSolution() : Error("linear system has no solution") {}
  using Error::Error;
};

class NonUniqueSolution : public Error {
 public:
  NonUniqueSolution() : Error("linear system has more than one solution") {}
  using Error::Error;
};

// Structure constants that violate an axiom the computation relies on.
class InvalidAlgebra : public Error {
 public:
  using Error::Error;
};

class NoAntipode : public Error {
 public:
  using Error::Error;
};

// Data that passed the checks it was given but contradicts a theorem
// (two-dimensional integral spaces, non-faithful integrals, ...).
class CorruptedData : public Error {
 public:
  using Error::Error;
};

class NotRegular : public Error {
 public:
  using Error::Error;
};

// Malformed algebra or identity file text; carries a 1-based position.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) +
              ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed file whose content is inconsistent (index out of range,
// unknown field kind, unparsable scalar, ...).
class SemanticError : public Error {
 public:
  using Error::Error;
};

// Identity that parses but is ill-typed (pairing of two A-terms, mixed
// Sweedler legs, sides of different sort, ...).
class SortError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopf

#pragma once

#include <stdexcept>
#include <string>

namespace lielab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a precondition (shape mismatch, bad index set, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"
                       : what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class NotInAlgebra : public Error {
 public:
  using Error::Error;
};

// A structure-constant tensor violates antisymmetry or Jacobi.
class AxiomViolation : public Error {
 public:
  AxiomViolation(const std::string& what, int i, int j, int k)
      : Error(what), i_(i), j_(j), k_(k) {}
  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }

 private:
  int i_, j_, k_;
};

class StructureError : public Error {
 public:
  using Error::Error;
};

class NotAbelian : public Error {
 public:
  using Error::Error;
};

class NotDiagonalizable : public Error {
 public:
  using Error::Error;
};

class FormError : public Error {
 public:
  using Error::Error;
};

class ProbeSetError : public Error {
 public:
  using Error::Error;
};

}  // namespace lielab

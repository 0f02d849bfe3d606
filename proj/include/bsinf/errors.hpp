#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsinf {

/// Base of every error the engine reports to callers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class DegreeZero : public Error {
 public:
  DegreeZero() : Error("polynomial is a nonzero constant; it defines no curve") {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("polynomial is identically zero") {}
};

class DegenerateElimination : public Error {
 public:
  using Error::Error;
};

class PointNotOnCurve : public Error {
 public:
  using Error::Error;
};

class NonTransverseCircle : public Error {
 public:
  using Error::Error;
};

class NotRealizable : public Error {
 public:
  using Error::Error;
};

/// Inputs outside what the exact pipeline represents (irrational points at infinity).
class UnsupportedCurve : public Error {
 public:
  using Error::Error;
};

}  // namespace bsinf

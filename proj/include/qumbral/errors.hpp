#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qumbral {

// Root of the library's exception hierarchy.  Everything thrown on purpose
// derives from Error; anything else escaping is a bug.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scalar or field division by an exact zero.
struct DivisionByZero : Error {
  using Error::Error;
};

// Evaluation of a rational function at a root of its reduced denominator.
struct PoleError : Error {
  using Error::Error;
};

// Arithmetic between truncated series of different truncation orders.
struct OrderMismatch : Error {
  using Error::Error;
};

// Multiplicative inversion of a series whose constant term vanishes.
struct NotInvertible : Error {
  using Error::Error;
};

// Exact division with a nonzero remainder, or t-division of a series with a
// nonzero constant term.
struct NotDivisible : Error {
  using Error::Error;
};

// A series was truncated below the degree the operation needs.
struct TruncationTooSmall : Error {
  using Error::Error;
};

// Composition parts that do not sum to the declared total.
struct SumMismatch : Error {
  using Error::Error;
};

// An index or order parameter outside its documented range.
struct OutOfRange : Error {
  using Error::Error;
};

// Identity id not present in the verification catalog.
struct UnknownIdentity : Error {
  using Error::Error;
};

// Lexical or syntactic failure while reading a polynomial expression.
// Carries the byte offset of the offending token and what was expected there.
struct ParseError : Error {
  std::size_t position;
  std::string expected;

  ParseError(std::size_t pos, std::string expected_what)
      : Error("parse error at position " + std::to_string(pos) + ": expected " +
              expected_what),
        position(pos),
        expected(std::move(expected_what)) {}
};

}  // namespace qumbral

#pragma once

#include <string>
#include <vector>

#include "qumbral/bigrat.hpp"

namespace qumbral {

// Dense polynomial in the indeterminate q with exact rational coefficients.
// coeffs_[i] multiplies q^i.  Canonical form stores no trailing zeros, so the
// zero polynomial is the empty vector and degree() is -1 for it.
class QNumPoly {
 public:
  QNumPoly() = default;
  explicit QNumPoly(const BigRat& constant);
  explicit QNumPoly(long constant);
  explicit QNumPoly(std::vector<BigRat> coeffs);  // trims trailing zeros

  static QNumPoly variable();                     // q
  static QNumPoly monomial(int power, const BigRat& coeff = BigRat(1));

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigRat& coeff(int i) const;               // 0 outside 0..degree
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  const BigRat& leading() const;                  // pre: nonzero

  friend QNumPoly operator+(const QNumPoly& a, const QNumPoly& b);
  friend QNumPoly operator-(const QNumPoly& a, const QNumPoly& b);
  friend QNumPoly operator*(const QNumPoly& a, const QNumPoly& b);
  QNumPoly operator-() const;
  friend bool operator==(const QNumPoly& a, const QNumPoly& b) = default;

  QNumPoly scaled(const BigRat& s) const;
  QNumPoly monic() const;                         // pre: nonzero

  BigRat eval(const BigRat& point) const;

  // Exact quotient a / b; throws NotDivisible when the remainder is nonzero
  // and DivisionByZero when b is zero.
  static QNumPoly exact_div(const QNumPoly& a, const QNumPoly& b);

  // Monic gcd over the rationals via a primitive pseudo-remainder sequence on
  // integer images (content stripped after every step).  gcd(0, 0) throws
  // DivisionByZero; gcd(p, 0) = monic(p).
  static QNumPoly gcd(const QNumPoly& a, const QNumPoly& b);

  // Ascending powers of q, e.g. "-1/4 + 1/4*q + q^3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

}  // namespace qumbral

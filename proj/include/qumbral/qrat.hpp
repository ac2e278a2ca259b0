#pragma once

#include <string>

#include "qumbral/qnumpoly.hpp"

namespace qumbral {

// Element of the rational function field Q(q), stored as a reduced quotient
// num/den of polynomials.  Canonical form: den is monic, gcd(num, den) = 1,
// and zero is 0/1 — so equality is component-wise and every arithmetic result
// is immediately comparable.
class QRat {
 public:
  QRat() : num_(), den_(QNumPoly(1)) {}
  QRat(const BigRat& constant);   // implicit: scalars embed in Q(q)
  QRat(long constant);
  QRat(QNumPoly poly);            // implicit: polynomials embed in Q(q)
  QRat(const QNumPoly& num, const QNumPoly& den);  // reduces; den != 0

  const QNumPoly& num() const { return num_; }
  const QNumPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);  // DivisionByZero
  QRat operator-() const;
  QRat inverse() const;                                 // DivisionByZero
  friend bool operator==(const QRat& a, const QRat& b) = default;

  QRat& operator+=(const QRat& b) { return *this = *this + b; }
  QRat& operator-=(const QRat& b) { return *this = *this - b; }
  QRat& operator*=(const QRat& b) { return *this = *this * b; }
  QRat& operator/=(const QRat& b) { return *this = *this / b; }

  // Substitutes a rational number for q.  Throws PoleError when the reduced
  // denominator vanishes at the point (the numerator then cannot).
  BigRat eval(const BigRat& point) const;

  // "num" when den = 1, otherwise "num/den" with multi-term operands
  // parenthesized; both halves print in ascending powers of q.
  std::string to_string() const;

 private:
  struct AlreadyCanonical {};
  QRat(QNumPoly num, QNumPoly den, AlreadyCanonical);

  QNumPoly num_;
  QNumPoly den_;
};

}  // namespace qumbral

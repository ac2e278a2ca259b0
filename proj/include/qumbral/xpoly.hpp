#pragma once

#include <string>
#include <vector>

#include "qumbral/qrat.hpp"

namespace qumbral {

// Polynomial in x whose coefficients live in Q(q).  Dense, ascending, no
// trailing zeros (zero polynomial = empty vector, degree -1).
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<QRat> coeffs);   // trims trailing zeros

  static XPoly constant(const QRat& c);
  static XPoly x();
  static XPoly monomial(int power, const QRat& coeff = QRat(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const QRat& coeff(int k) const;             // 0 outside 0..degree
  const std::vector<QRat>& coeffs() const { return c_; }

  friend XPoly operator+(const XPoly& p, const XPoly& r);
  friend XPoly operator-(const XPoly& p, const XPoly& r);
  friend XPoly operator*(const XPoly& p, const XPoly& r);
  XPoly operator-() const;
  friend bool operator==(const XPoly& p, const XPoly& r) = default;

  XPoly& operator+=(const XPoly& r) { return *this = *this + r; }
  XPoly& operator-=(const XPoly& r) { return *this = *this - r; }

  XPoly scaled(const QRat& s) const;

  // Jackson q-derivative: D_q x^n = [n]_q x^{n-1}, extended linearly.
  XPoly dq() const;
  XPoly dq_iter(int k) const;                 // k-fold D_q; requires k >= 0

  // Jackson antiderivative from 0: x^n -> x^{n+1} / [n+1]_q, so that
  // D_q(jackson_antiderivative(p)) = p and the value at 0 is 0.
  XPoly jackson_antiderivative() const;

  // Definite Jackson integral over [a, b]: F(b) - F(a) for the antiderivative
  // F above.  Interval endpoints are scalars in Q(q).
  QRat jackson_integral(const QRat& a, const QRat& b) const;

  QRat eval(const QRat& point) const;

  // Ascending powers of x; each coefficient prints in ascending powers of q,
  // parenthesized when it has more than one term.  When every coefficient is
  // a polynomial in q the output reparses to an equal polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<QRat> c_;
};

// Recursive-descent parser for the expression grammar
//
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := 'x' | 'q' | rational | '(' expr ')'
//   rational := int ('/' nat)?
//
// Whitespace separates tokens freely.  Throws ParseError with the byte
// position and the expectation that failed.
XPoly parse_xpoly(const std::string& text);

}  // namespace qumbral

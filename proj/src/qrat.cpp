#include "qumbral/qrat.hpp"

#include <cassert>
#include <utility>

#include "qumbral/errors.hpp"

namespace qumbral {

QRat::QRat(const BigRat& constant)
    : num_(QNumPoly(constant)), den_(QNumPoly(1)) {}

QRat::QRat(long constant) : num_(QNumPoly(constant)), den_(QNumPoly(1)) {}

QRat::QRat(QNumPoly poly) : num_(std::move(poly)), den_(QNumPoly(1)) {}

QRat::QRat(QNumPoly num, QNumPoly den, AlreadyCanonical)
    : num_(std::move(num)), den_(std::move(den)) {
  assert(!den_.is_zero() && den_.leading() == 1);
}

QRat::QRat(const QNumPoly& num, const QNumPoly& den) {
  if (den.is_zero()) throw DivisionByZero("zero denominator in Q(q)");
  if (num.is_zero()) {
    num_ = QNumPoly();
    den_ = QNumPoly(1);
    return;
  }
  QNumPoly n = num;
  QNumPoly d = den;
  if (!d.is_constant() && !n.is_constant()) {
    QNumPoly g = QNumPoly::gcd(n, d);
    if (!g.is_one()) {
      n = QNumPoly::exact_div(n, g);
      d = QNumPoly::exact_div(d, g);
    }
  }
  if (d.leading() != 1) {
    const BigRat inv_lead = 1 / d.leading();
    n = n.scaled(inv_lead);
    d = d.scaled(inv_lead);
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

// a/b + c/d with b, d monic and both fractions reduced.  With g = gcd(b, d),
// b = g b', d = g d', the sum is (a d' + c b') / (b' d' g); the only common
// factor left can divide g, so one more gcd against g finishes the reduction.
QRat operator+(const QRat& x, const QRat& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const QNumPoly& a = x.num_;
  const QNumPoly& b = x.den_;
  const QNumPoly& c = y.num_;
  const QNumPoly& d = y.den_;
  if (b.is_one() && d.is_one()) return QRat(a + c);
  if (b == d) return QRat(a + c, b);
  // A monic constant denominator is exactly 1; the sum over the other
  // denominator is then already reduced (any common factor would divide the
  // coprime numerator).
  if (b.is_one()) {
    QNumPoly num = a * d + c;
    if (num.is_zero()) return QRat();
    return QRat{std::move(num), d, QRat::AlreadyCanonical{}};
  }
  if (d.is_one()) {
    QNumPoly num = a + c * b;
    if (num.is_zero()) return QRat();
    return QRat{std::move(num), b, QRat::AlreadyCanonical{}};
  }
  QNumPoly g = QNumPoly::gcd(b, d);
  if (g.is_one()) {
    QNumPoly num = a * d + c * b;
    if (num.is_zero()) return QRat();
    return QRat{std::move(num), b * d, QRat::AlreadyCanonical{}};
  }
  QNumPoly b1 = QNumPoly::exact_div(b, g);
  QNumPoly d1 = QNumPoly::exact_div(d, g);
  QNumPoly num = a * d1 + c * b1;
  if (num.is_zero()) return QRat();
  QNumPoly g2 = QNumPoly::gcd(num, g);
  if (!g2.is_one()) {
    num = QNumPoly::exact_div(num, g2);
    g = QNumPoly::exact_div(g, g2);
  }
  return QRat{std::move(num), b1 * d1 * g, QRat::AlreadyCanonical{}};
}

QRat operator-(const QRat& x, const QRat& y) { return x + (-y); }

QRat QRat::operator-() const {
  QRat out = *this;
  out.num_ = -out.num_;
  return out;
}

QRat operator*(const QRat& x, const QRat& y) {
  if (x.is_zero() || y.is_zero()) return QRat();
  const QNumPoly& a = x.num_;
  const QNumPoly& b = x.den_;
  const QNumPoly& c = y.num_;
  const QNumPoly& d = y.den_;
  if (b.is_one() && d.is_one()) return QRat(a * c);
  // Cross-reduce before multiplying: gcd(a, d) and gcd(c, b) carry every
  // common factor, so the product below is already in lowest terms.
  QNumPoly a1 = a;
  QNumPoly d1 = d;
  if (!a.is_constant() && !d.is_constant()) {
    QNumPoly g = QNumPoly::gcd(a, d);
    if (!g.is_one()) {
      a1 = QNumPoly::exact_div(a, g);
      d1 = QNumPoly::exact_div(d, g);
    }
  }
  QNumPoly c1 = c;
  QNumPoly b1 = b;
  if (!c.is_constant() && !b.is_constant()) {
    QNumPoly g = QNumPoly::gcd(c, b);
    if (!g.is_one()) {
      c1 = QNumPoly::exact_div(c, g);
      b1 = QNumPoly::exact_div(b, g);
    }
  }
  return QRat{a1 * c1, b1 * d1, QRat::AlreadyCanonical{}};
}

QRat QRat::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(q)");
  QNumPoly n = den_;
  QNumPoly d = num_;
  const BigRat inv_lead = 1 / d.leading();
  if (inv_lead != 1) {
    n = n.scaled(inv_lead);
    d = d.scaled(inv_lead);
  }
  return QRat{std::move(n), std::move(d), AlreadyCanonical{}};
}

QRat operator/(const QRat& x, const QRat& y) { return x * y.inverse(); }

BigRat QRat::eval(const BigRat& point) const {
  const BigRat den_value = den_.eval(point);
  if (den_value == 0) {
    throw PoleError("denominator vanishes at q = " + qumbral::to_string(point));
  }
  return num_.eval(point) / den_value;
}

std::string QRat::to_string() const {
  if (den_.is_one()) return num_.to_string();
  const auto wrap = [](const QNumPoly& p) {
    std::string s = p.to_string();
    int terms = 0;
    for (const auto& c : p.coeffs()) {
      if (c != 0) ++terms;
    }
    const bool negated = !p.is_zero() && p.leading() < 0;
    if (terms > 1 || negated) return "(" + s + ")";
    return s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace qumbral

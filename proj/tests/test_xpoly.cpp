#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "qumbral/errors.hpp"
#include "qumbral/qcomb.hpp"
#include "qumbral/xpoly.hpp"

using namespace qumbral;

namespace {

QRat qpoly(std::vector<long> coeffs) {
  std::vector<BigRat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return QRat(QNumPoly(std::move(c)));
}

struct Rng {
  std::mt19937 gen{23};

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
  }

  QRat scalar() {
    BigRat v(integer(-5, 5), integer(1, 4));
    v.canonicalize();
    return QRat(v);
  }

  XPoly poly(int max_degree) {
    std::vector<QRat> c;
    const long degree = integer(0, max_degree);
    for (long i = 0; i <= degree; ++i) c.push_back(scalar());
    return XPoly(std::move(c));
  }

  // Coefficients that are polynomials in q with denominator 1; the printed
  // form of such a polynomial is guaranteed to reparse.
  XPoly printable_poly(int max_degree) {
    std::vector<QRat> c;
    const long degree = integer(0, max_degree);
    for (long i = 0; i <= degree; ++i) {
      std::vector<BigRat> qc;
      const long qdeg = integer(0, 2);
      for (long j = 0; j <= qdeg; ++j) {
        qc.emplace_back(integer(-3, 3), integer(1, 4));
        qc.back().canonicalize();
      }
      c.push_back(QRat(QNumPoly(std::move(qc))));
    }
    return XPoly(std::move(c));
  }
};

}  // namespace

TEST_CASE("canonical form: trailing zeros trim, zero has degree -1") {
  const XPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(XPoly({QRat(0), QRat(0)}).is_zero());
  CHECK(XPoly({QRat(1), QRat(0)}).degree() == 0);
  CHECK(XPoly::monomial(3).degree() == 3);
  CHECK(XPoly::monomial(0, QRat(7)) == XPoly::constant(QRat(7)));
  // coeff is total: zero outside the stored range.
  CHECK(XPoly::x().coeff(5).is_zero());
}

TEST_CASE("ring laws and evaluation homomorphism on random polynomials") {
  Rng rng;
  for (int trial = 0; trial < 30; ++trial) {
    const XPoly p = rng.poly(4);
    const XPoly r = rng.poly(4);
    const XPoly s = rng.poly(3);
    CHECK(p + r == r + p);
    CHECK(p * r == r * p);
    CHECK((p * r) * s == p * (r * s));
    CHECK(p * (r + s) == p * r + p * s);
    CHECK(p - p == XPoly());

    const QRat at = rng.scalar();
    CHECK((p * r).eval(at) == p.eval(at) * r.eval(at));
    CHECK((p + r).eval(at) == p.eval(at) + r.eval(at));
  }
}

TEST_CASE("q-derivative: power rule and linearity") {
  // D_q x^n = [n]_q x^{n-1}.
  for (int n = 1; n <= 6; ++n) {
    CHECK(XPoly::monomial(n).dq() ==
          XPoly::monomial(n - 1, QRat(q_int(n))));
  }
  CHECK(XPoly::constant(QRat(5)).dq().is_zero());

  // D_q(x^3 + 2x) = [3]_q x^2 + 2.
  const XPoly p = XPoly::monomial(3) + XPoly::x().scaled(QRat(2));
  CHECK(p.dq() == XPoly::monomial(2, QRat(q_int(3))) + XPoly::constant(QRat(2)));

  Rng rng;
  for (int trial = 0; trial < 20; ++trial) {
    const XPoly a = rng.poly(5);
    const XPoly b = rng.poly(5);
    CHECK((a + b).dq() == a.dq() + b.dq());
    CHECK(a.scaled(QRat(3)).dq() == a.dq().scaled(QRat(3)));
    // Iterated derivative matches repeated application.
    CHECK(a.dq_iter(3) == a.dq().dq().dq());
    CHECK(a.dq_iter(0) == a);
  }
}

TEST_CASE("Jackson antiderivative inverts the q-derivative") {
  // x^n -> x^{n+1}/[n+1]_q, vanishing at 0.
  for (int n = 0; n <= 5; ++n) {
    const XPoly f = XPoly::monomial(n).jackson_antiderivative();
    CHECK(f == XPoly::monomial(n + 1, QRat(1) / QRat(q_int(n + 1))));
  }
  Rng rng;
  for (int trial = 0; trial < 20; ++trial) {
    const XPoly p = rng.poly(5);
    const XPoly f = p.jackson_antiderivative();
    CHECK(f.dq() == p);
    CHECK(f.eval(QRat(0)).is_zero());
    // And the other composition order fixes p up to its value at 0.
    CHECK(p.dq().jackson_antiderivative() ==
          p - XPoly::constant(p.eval(QRat(0))));
  }
}

TEST_CASE("definite Jackson integral") {
  // On monomials over [0, 1] the integral is 1/[n+1]_q.
  for (int n = 0; n <= 5; ++n) {
    CHECK(XPoly::monomial(n).jackson_integral(QRat(0), QRat(1)) ==
          QRat(1) / QRat(q_int(n + 1)));
  }
  Rng rng;
  for (int trial = 0; trial < 15; ++trial) {
    const XPoly p = rng.poly(4);
    const QRat a = rng.scalar();
    const QRat b = rng.scalar();
    const QRat c = rng.scalar();
    // Interval additivity and orientation.
    CHECK(p.jackson_integral(a, b) + p.jackson_integral(b, c) ==
          p.jackson_integral(a, c));
    CHECK(p.jackson_integral(a, b) == -p.jackson_integral(b, a));
  }
}

TEST_CASE("printing: ascending powers, parenthesized q-coefficients") {
  CHECK(XPoly().to_string() == "0");
  CHECK(XPoly::x().to_string() == "x");
  CHECK(XPoly::monomial(2).to_string() == "x^2");
  CHECK((XPoly::constant(QRat(3)) - XPoly::x().scaled(QRat(BigRat(1, 2))))
            .to_string() == "3 - 1/2*x");
  // Multi-term q-coefficients are wrapped so the string stays unambiguous.
  const XPoly p({qpoly({-1, 1}) * QRat(BigRat(1, 4)),
                 qpoly({1, 1}) * QRat(BigRat(-1, 2)), QRat(1)});
  CHECK(p.to_string() == "(-1/4 + 1/4*q) + (-1/2 - 1/2*q)*x + x^2");
}

TEST_CASE("parser: accepted forms") {
  CHECK(parse_xpoly("x") == XPoly::x());
  CHECK(parse_xpoly("  x ^ 2  ") == XPoly::monomial(2));
  CHECK(parse_xpoly("1/3") == XPoly::constant(QRat(BigRat(1, 3))));
  CHECK(parse_xpoly("-x^2") == -XPoly::monomial(2));
  CHECK(parse_xpoly("2*x^3 - 1/2") ==
        XPoly::monomial(3, QRat(2)) - XPoly::constant(QRat(BigRat(1, 2))));
  CHECK(parse_xpoly("(1+q)*x") == XPoly::monomial(1, qpoly({1, 1})));
  CHECK(parse_xpoly("q^2 - q*x + x^2") ==
        XPoly({qpoly({0, 0, 1}), -qpoly({0, 1}), QRat(1)}));
  CHECK(parse_xpoly("x*x*x") == XPoly::monomial(3));
  const XPoly xp1 = XPoly::x() + XPoly::constant(QRat(1));
  CHECK(parse_xpoly("(x+1)^3") == xp1 * xp1 * xp1);
  CHECK(parse_xpoly("-(x - q)") ==
        XPoly::constant(qpoly({0, 1})) - XPoly::x());
  // Precedence: ^ binds tighter than *, * tighter than +/-.
  CHECK(parse_xpoly("2*x^3") == XPoly::monomial(3, QRat(2)));
  CHECK(parse_xpoly("1 + 2*x") == XPoly({QRat(1), QRat(2)}));
  CHECK(parse_xpoly("x^2*x") == XPoly::monomial(3));
}

TEST_CASE("parser: rejected forms carry position and expectation") {
  CHECK_THROWS_AS(parse_xpoly(""), ParseError);
  CHECK_THROWS_AS(parse_xpoly("x + + 1"), ParseError);
  CHECK_THROWS_AS(parse_xpoly("x^^2"), ParseError);
  CHECK_THROWS_AS(parse_xpoly("2x"), ParseError);   // no implicit product
  CHECK_THROWS_AS(parse_xpoly("x^"), ParseError);
  CHECK_THROWS_AS(parse_xpoly("x^-2"), ParseError);
  CHECK_THROWS_AS(parse_xpoly("1/0"), ParseError);
  CHECK_THROWS_AS(parse_xpoly(")"), ParseError);
  CHECK_THROWS_AS(parse_xpoly("(x"), ParseError);
  CHECK_THROWS_AS(parse_xpoly("y"), ParseError);
  CHECK_THROWS_AS(parse_xpoly("1.5"), ParseError);
  CHECK_THROWS_AS(parse_xpoly("+x"), ParseError);
  CHECK_THROWS_AS(parse_xpoly("x^99999"), ParseError);

  try {
    parse_xpoly("x + + 1");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.position == 4);
    CHECK_FALSE(err.expected.empty());
  }
}

TEST_CASE("print/parse round trip for q-polynomial coefficients") {
  Rng rng;
  for (int trial = 0; trial < 40; ++trial) {
    const XPoly p = rng.printable_poly(5);
    CHECK(parse_xpoly(p.to_string()) == p);
  }
}

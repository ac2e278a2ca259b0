#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "qumbral/dpseries.hpp"
#include "qumbral/errors.hpp"
#include "qumbral/families.hpp"
#include "qumbral/qcomb.hpp"
#include "qumbral/umbral.hpp"
#include "qumbral/xpoly.hpp"

using namespace qumbral;

namespace {

struct Rng {
  std::mt19937 gen{31};

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
  }

  QRat scalar() {
    BigRat v(integer(-4, 4), integer(1, 3));
    v.canonicalize();
    return QRat(v);
  }

  XPoly poly(int max_degree) {
    std::vector<QRat> c;
    const long degree = integer(0, max_degree);
    for (long i = 0; i <= degree; ++i) c.push_back(scalar());
    return XPoly(std::move(c));
  }

  DPSeries series(int truncation) {
    std::vector<QRat> c;
    for (int k = 0; k <= truncation; ++k) c.push_back(scalar());
    return DPSeries(truncation, std::move(c));
  }
};

}  // namespace

TEST_CASE("pairing is fixed by <t^k | x^n> = [n]_q! delta_{n,k}") {
  const int bound = 6;
  for (int k = 0; k <= bound; ++k) {
    const DPSeries tk = DPSeries::t(bound).power(k);
    for (int n = 0; n <= bound; ++n) {
      const QRat expect = n == k ? QRat(q_factorial(n)) : QRat(0);
      CHECK(pair(tk, XPoly::monomial(n)) == expect);
    }
  }
  // Bilinearity spot check.
  Rng rng;
  const DPSeries f = rng.series(5);
  const DPSeries g = rng.series(5);
  const XPoly p = rng.poly(5);
  const XPoly r = rng.poly(5);
  CHECK(pair(f + g, p) == pair(f, p) + pair(g, p));
  CHECK(pair(f, p + r) == pair(f, p) + pair(f, r));
  CHECK_THROWS_AS(pair(DPSeries::t(2), XPoly::monomial(5)),
                  TruncationTooSmall);
}

TEST_CASE("apply: t acts as the q-derivative, e_q(t) as a binomial shift") {
  Rng rng;
  for (int trial = 0; trial < 20; ++trial) {
    const XPoly p = rng.poly(5);
    CHECK(apply(DPSeries::t(5), p) == p.dq());
    CHECK(apply(DPSeries::one(5), p) == p);
  }
  // apply(e_q, x^n) = sum_k C(n,k)_q x^{n-k}: the q-binomial expansion of the
  // shifted monomial.
  for (int n = 0; n <= 5; ++n) {
    XPoly expect;
    for (int k = 0; k <= n; ++k) {
      expect += XPoly::monomial(n - k, QRat(q_binomial(n, k)));
    }
    CHECK(apply(DPSeries::eq_exponential(5), XPoly::monomial(n)) == expect);
  }
}

TEST_CASE("multiplication on series is adjoint to application") {
  // <f g | p> = <f | apply(g, p)>.
  Rng rng;
  for (int trial = 0; trial < 25; ++trial) {
    const DPSeries f = rng.series(5);
    const DPSeries g = rng.series(5);
    const XPoly p = rng.poly(5);
    CHECK(pair(f * g, p) == pair(f, apply(g, p)));
  }
}

TEST_CASE("Sheffer biorthogonality holds for the constructed families") {
  const int bound = 6;
  // Monomials against g = 1 are the defining case.
  std::vector<XPoly> monomials;
  for (int n = 0; n <= bound; ++n) monomials.push_back(XPoly::monomial(n));
  CHECK(sheffer_check(DPSeries::one(bound), monomials, bound));

  const PolyFamily euler = euler_polys(bound);
  CHECK(sheffer_check(euler_level_series(bound), euler.members, bound));

  const PolyFamily bernoulli = bernoulli_polys(bound);
  CHECK(sheffer_check(bernoulli_level_series(bound), bernoulli.members, bound));
}

TEST_CASE("a corrupted member yields a localized violation") {
  const int bound = 5;
  PolyFamily euler = euler_polys(bound);
  euler.members[2] += XPoly::x();
  const auto v =
      sheffer_violation(euler_level_series(bound), euler.members, bound);
  REQUIRE(v.has_value());
  CHECK(v->n == 2);
  CHECK(v->k == 0);
  // <g | x> picks out the level series' linear coefficient, 1/2.
  CHECK(v->got == QRat(BigRat(1, 2)));
  CHECK(v->expected == QRat(0));
}

TEST_CASE("expansion coefficients in the q-Euler basis") {
  // x^2 = (1/2) E_0(x) + ([2]_q/2) E_1(x) + E_2(x).
  const std::vector<QRat> b = expand_in_euler(XPoly::monomial(2));
  REQUIRE(b.size() == 3);
  CHECK(b[0] == QRat(BigRat(1, 2)));
  CHECK(b[1] == QRat(q_int(2)) * QRat(BigRat(1, 2)));
  CHECK(b[2] == QRat(1));

  CHECK(expand_in_euler(XPoly()).empty());

  // Reconstruction is exact for random polynomials.
  Rng rng;
  const PolyFamily euler = euler_polys(8);
  for (int trial = 0; trial < 15; ++trial) {
    const XPoly p = rng.poly(6);
    const std::vector<QRat> coeffs = expand_in_euler(p);
    XPoly back;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      back += euler.members[k].scaled(coeffs[k]);
    }
    CHECK(back == p);
  }
}

TEST_CASE("order weights match the divided powers of (e_q + 1)^r") {
  for (int r = 0; r <= 3; ++r) {
    const DPSeries reference =
        (DPSeries::eq_exponential(6) + DPSeries::one(6)).power(r);
    for (int m = 0; m <= 6; ++m) {
      CHECK(QRat(order_weight(r, m)) == reference.coeff(m));
    }
  }
  // W_0(m) = delta_{m,0}; W_1(0) = 2 and W_1(m) = 1 for m >= 1.
  CHECK(order_weight(0, 0).is_one());
  CHECK(order_weight(0, 3).is_zero());
  CHECK(order_weight(1, 0) == QNumPoly(2));
  CHECK(order_weight(1, 4).is_one());
}

TEST_CASE("order-r expansion degenerates to the plain one at r = 1") {
  Rng rng;
  for (int trial = 0; trial < 15; ++trial) {
    const XPoly p = rng.poly(5);
    CHECK(expand_in_euler_r(p, 1) == expand_in_euler(p));
  }
}

TEST_CASE("order-r expansion reconstructs through the order-r basis") {
  Rng rng;
  for (int r = 1; r <= 3; ++r) {
    const PolyFamily basis = euler_r(7, r, BuildPath::series);
    for (int trial = 0; trial < 8; ++trial) {
      const XPoly p = rng.poly(5);
      const std::vector<QRat> coeffs = expand_in_euler_r(p, r);
      XPoly back;
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        back += basis.members[k].scaled(coeffs[k]);
      }
      CHECK(back == p);
    }
  }
}

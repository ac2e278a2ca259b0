#include "qumbral/umbral.hpp"

#include <vector>

#include "qumbral/errors.hpp"
#include "qumbral/qcomb.hpp"

namespace qumbral {

QRat pair(const DPSeries& f, const XPoly& p) {
  if (p.degree() > f.truncation()) {
    throw TruncationTooSmall("pairing needs truncation >= deg p");
  }
  // With f = sum a_k t^k/[k]_q!, linearity gives <f | x^n> = a_n: the [n]_q!
  // from <t^n | x^n> cancels the divided power.  So the pairing is a plain
  // dot product of the divided-power coefficients with p's coefficients.
  QRat sum;
  for (int k = 0; k <= p.degree(); ++k) {
    const QRat& a = f.coeff(k);
    const QRat& c = p.coeff(k);
    if (a.is_zero() || c.is_zero()) continue;
    sum += a * c;
  }
  return sum;
}

XPoly apply(const DPSeries& f, const XPoly& p) {
  if (p.degree() > f.truncation()) {
    throw TruncationTooSmall("operator action needs truncation >= deg p");
  }
  XPoly result;
  XPoly derivative = p;
  for (int k = 0; k <= p.degree() && !derivative.is_zero(); ++k) {
    const QRat& a = f.coeff(k);
    if (!a.is_zero()) {
      result += derivative.scaled(a / QRat(q_factorial(k)));
    }
    derivative = derivative.dq();
  }
  return result;
}

std::optional<ShefferViolation> sheffer_violation(
    const DPSeries& g, const std::vector<XPoly>& members, int n_max) {
  if (static_cast<int>(members.size()) <= n_max) {
    throw OutOfRange("family too short for requested bound");
  }
  if (g.truncation() < n_max) {
    throw TruncationTooSmall("sheffer check needs truncation >= n_max");
  }
  for (int n = 0; n <= n_max; ++n) {
    // <g t^k | S_n> = <g | D_q^k S_n>, so walk the derivative ladder once.
    XPoly derivative = members[static_cast<std::size_t>(n)];
    for (int k = 0; k <= n_max; ++k) {
      const QRat got = pair(g, derivative);
      const QRat expected = k == n ? QRat(q_factorial(n)) : QRat();
      if (got != expected) {
        return ShefferViolation{n, k, got, expected};
      }
      derivative = derivative.dq();
    }
  }
  return std::nullopt;
}

bool sheffer_check(const DPSeries& g, const std::vector<XPoly>& members,
                   int n_max) {
  return !sheffer_violation(g, members, n_max).has_value();
}

std::vector<QRat> expand_in_euler(const XPoly& p) {
  std::vector<QRat> coefficients;
  XPoly derivative = p;
  const QRat half(BigRat(1, 2));
  for (int k = 0; k <= p.degree(); ++k) {
    coefficients.push_back(half * (derivative.eval(QRat(1)) + derivative.eval(QRat())) /
                           QRat(q_factorial(k)));
    derivative = derivative.dq();
  }
  return coefficients;
}

// Plain binomial C(r,l); the inner sum runs over all weak compositions of m
// of length l, each contributing its q-multinomial.
QNumPoly order_weight(int r, int m) {
  QNumPoly total;
  for (int l = 0; l <= r; ++l) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(r),
                 static_cast<unsigned long>(l));
    QNumPoly inner;
    CompositionEnumerator gen(m, l);
    Composition c;
    while (gen.next(c)) inner = inner + q_multinomial(m, c);
    total = total + inner.scaled(BigRat(binom));
  }
  return total;
}

std::vector<QRat> expand_in_euler_r(const XPoly& p, int r) {
  if (r < 1) throw OutOfRange("expansion order must be >= 1");
  const int n = p.degree();
  std::vector<QRat> coefficients;
  if (n < 0) return coefficients;

  // Derivative values at 0: derivative_at_zero[j] = (D_q^j p)(0).
  std::vector<QRat> derivative_at_zero;
  {
    XPoly derivative = p;
    for (int j = 0; j <= n; ++j) {
      derivative_at_zero.push_back(derivative.eval(QRat()));
      derivative = derivative.dq();
    }
  }

  BigRat half_power(1);
  for (int i = 0; i < r; ++i) half_power /= 2;

  std::vector<QNumPoly> weights;
  for (int m = 0; m <= n; ++m) weights.push_back(order_weight(r, m));

  for (int k = 0; k <= n; ++k) {
    QRat sum;
    for (int m = 0; m + k <= n; ++m) {
      const QRat& value = derivative_at_zero[static_cast<std::size_t>(m + k)];
      if (value.is_zero()) continue;
      sum += QRat(weights[static_cast<std::size_t>(m)]) * value /
             QRat(q_factorial(m));
    }
    coefficients.push_back(sum.is_zero()
                               ? QRat()
                               : sum * QRat(half_power) / QRat(q_factorial(k)));
  }
  return coefficients;
}

}  // namespace qumbral

#include "qumbral/qnumpoly.hpp"

#include <algorithm>
#include <utility>

#include "qumbral/errors.hpp"

namespace qumbral {

QNumPoly::QNumPoly(const BigRat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QNumPoly::QNumPoly(long constant) : QNumPoly(BigRat(constant)) {}

QNumPoly::QNumPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

QNumPoly QNumPoly::variable() { return monomial(1); }

QNumPoly QNumPoly::monomial(int power, const BigRat& coeff) {
  if (coeff == 0) return {};
  std::vector<BigRat> c(static_cast<std::size_t>(power) + 1, BigRat(0));
  c.back() = coeff;
  return QNumPoly(std::move(c));
}

bool QNumPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_[0] == 1;
}

const BigRat& QNumPoly::coeff(int i) const {
  static const BigRat kZero(0);
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigRat& QNumPoly::leading() const { return coeffs_.back(); }

void QNumPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QNumPoly operator+(const QNumPoly& a, const QNumPoly& b) {
  std::vector<BigRat> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                          BigRat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return QNumPoly(std::move(out));
}

QNumPoly operator-(const QNumPoly& a, const QNumPoly& b) {
  std::vector<BigRat> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                          BigRat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return QNumPoly(std::move(out));
}

QNumPoly operator*(const QNumPoly& a, const QNumPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRat> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QNumPoly(std::move(out));
}

QNumPoly QNumPoly::operator-() const {
  std::vector<BigRat> out(coeffs_);
  for (auto& c : out) c = -c;
  return QNumPoly(std::move(out));
}

QNumPoly QNumPoly::scaled(const BigRat& s) const {
  if (s == 0) return {};
  std::vector<BigRat> out(coeffs_);
  for (auto& c : out) c *= s;
  return QNumPoly(std::move(out));
}

QNumPoly QNumPoly::monic() const {
  if (leading() == 1) return *this;
  return scaled(1 / leading());
}

BigRat QNumPoly::eval(const BigRat& point) const {
  BigRat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * point + *it;
  }
  return acc;
}

QNumPoly QNumPoly::exact_div(const QNumPoly& a, const QNumPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return {};
  if (b.is_constant()) return a.scaled(1 / b.coeffs_[0]);
  if (a.degree() < b.degree()) {
    throw NotDivisible("quotient degree would be negative");
  }
  const int db = b.degree();
  std::vector<BigRat> rem(a.coeffs_);
  std::vector<BigRat> quot(a.coeffs_.size() - b.coeffs_.size() + 1, BigRat(0));
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    BigRat c = rem[static_cast<std::size_t>(i + db)] / b.leading();
    quot[static_cast<std::size_t>(i)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  for (int j = 0; j < db; ++j) {
    if (rem[static_cast<std::size_t>(j)] != 0) {
      throw NotDivisible("nonzero remainder in exact division");
    }
  }
  return QNumPoly(std::move(quot));
}

namespace {

// Integer image of p with denominators cleared, integer content divided out,
// and a positive leading coefficient.  p must be nonzero.
std::vector<BigInt> primitive_integer_image(const QNumPoly& p) {
  BigInt den_lcm(1);
  for (const auto& c : p.coeffs()) {
    BigInt lcm_out;
    mpz_lcm(lcm_out.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
    den_lcm = lcm_out;
  }
  std::vector<BigInt> z;
  z.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    BigRat scaled = c * BigRat(den_lcm);
    z.push_back(scaled.get_num());  // den_lcm clears every denominator
  }
  BigInt content(0);
  for (const auto& v : z) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    content = g;
  }
  if (z.back() < 0) content = -content;
  for (auto& v : z) v /= content;
  return z;
}

void strip_content(std::vector<BigInt>& z) {
  BigInt content(0);
  for (const auto& v : z) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    content = g;
  }
  if (z.back() < 0) content = -content;
  for (auto& v : z) v /= content;
}

// Pseudo-remainder: repeatedly scales A by lc(B) and cancels the top term, so
// all arithmetic stays in Z.  Result has degree < deg B (possibly empty).
std::vector<BigInt> pseudo_remainder(std::vector<BigInt> a,
                                     const std::vector<BigInt>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const BigInt& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db) {
    const BigInt la = a.back();
    for (auto& c : a) c *= lb;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

QNumPoly QNumPoly::gcd(const QNumPoly& a, const QNumPoly& b) {
  if (a.is_zero() && b.is_zero()) {
    throw DivisionByZero("gcd of two zero polynomials");
  }
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return QNumPoly(1);
  if (a == b) return a.monic();

  std::vector<BigInt> big = primitive_integer_image(a);
  std::vector<BigInt> small = primitive_integer_image(b);
  if (big.size() < small.size()) std::swap(big, small);
  while (true) {
    std::vector<BigInt> rem = pseudo_remainder(std::move(big), small);
    if (rem.empty()) break;
    strip_content(rem);
    big = std::move(small);
    small = std::move(rem);
  }
  std::vector<BigRat> out;
  out.reserve(small.size());
  for (const auto& v : small) out.emplace_back(v);
  return QNumPoly(std::move(out)).monic();
}

std::string QNumPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const BigRat& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigRat mag = negative ? BigRat(-c) : c;
    std::string body;
    if (i == 0) {
      body = qumbral::to_string(mag);
    } else {
      const std::string power = i == 1 ? "q" : "q^" + std::to_string(i);
      body = (mag == 1) ? power : qumbral::to_string(mag) + "*" + power;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
  }
  return out;
}

}  // namespace qumbral

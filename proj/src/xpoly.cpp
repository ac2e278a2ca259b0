#include "qumbral/xpoly.hpp"

#include <algorithm>
#include <utility>

#include "qumbral/errors.hpp"
#include "qumbral/qcomb.hpp"

namespace qumbral {

XPoly::XPoly(std::vector<QRat> coeffs) : c_(std::move(coeffs)) { trim(); }

XPoly XPoly::constant(const QRat& c) {
  return XPoly(std::vector<QRat>{c});
}

XPoly XPoly::x() { return monomial(1); }

XPoly XPoly::monomial(int power, const QRat& coeff) {
  if (power < 0) throw OutOfRange("negative monomial power");
  if (coeff.is_zero()) return {};
  std::vector<QRat> c(static_cast<std::size_t>(power) + 1, QRat());
  c.back() = coeff;
  return XPoly(std::move(c));
}

const QRat& XPoly::coeff(int k) const {
  static const QRat kZero;
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(k)];
}

void XPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly operator+(const XPoly& p, const XPoly& r) {
  std::vector<QRat> out(std::max(p.c_.size(), r.c_.size()), QRat());
  for (std::size_t i = 0; i < p.c_.size(); ++i) out[i] = p.c_[i];
  for (std::size_t i = 0; i < r.c_.size(); ++i) out[i] += r.c_[i];
  return XPoly(std::move(out));
}

XPoly operator-(const XPoly& p, const XPoly& r) {
  std::vector<QRat> out(std::max(p.c_.size(), r.c_.size()), QRat());
  for (std::size_t i = 0; i < p.c_.size(); ++i) out[i] = p.c_[i];
  for (std::size_t i = 0; i < r.c_.size(); ++i) out[i] -= r.c_[i];
  return XPoly(std::move(out));
}

XPoly operator*(const XPoly& p, const XPoly& r) {
  if (p.is_zero() || r.is_zero()) return {};
  std::vector<QRat> out(p.c_.size() + r.c_.size() - 1, QRat());
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    if (p.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < r.c_.size(); ++j) {
      if (r.c_[j].is_zero()) continue;
      out[i + j] += p.c_[i] * r.c_[j];
    }
  }
  return XPoly(std::move(out));
}

XPoly XPoly::operator-() const {
  std::vector<QRat> out(c_);
  for (auto& c : out) c = -c;
  return XPoly(std::move(out));
}

XPoly XPoly::scaled(const QRat& s) const {
  if (s.is_zero()) return {};
  std::vector<QRat> out(c_);
  for (auto& c : out) c *= s;
  return XPoly(std::move(out));
}

XPoly XPoly::dq() const {
  if (c_.size() <= 1) return {};
  std::vector<QRat> out(c_.size() - 1, QRat());
  for (std::size_t k = 0; k + 1 < c_.size(); ++k) {
    out[k] = c_[k + 1] * QRat(q_int(static_cast<int>(k) + 1));
  }
  return XPoly(std::move(out));
}

XPoly XPoly::dq_iter(int k) const {
  if (k < 0) throw OutOfRange("negative q-derivative order");
  XPoly cur = *this;
  for (int i = 0; i < k && !cur.is_zero(); ++i) cur = cur.dq();
  return cur;
}

XPoly XPoly::jackson_antiderivative() const {
  if (is_zero()) return {};
  std::vector<QRat> out(c_.size() + 1, QRat());
  for (std::size_t k = 0; k < c_.size(); ++k) {
    out[k + 1] = c_[k] / QRat(q_int(static_cast<int>(k) + 1));
  }
  return XPoly(std::move(out));
}

QRat XPoly::jackson_integral(const QRat& a, const QRat& b) const {
  const XPoly antiderivative = jackson_antiderivative();
  return antiderivative.eval(b) - antiderivative.eval(a);
}

QRat XPoly::eval(const QRat& point) const {
  QRat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * point + *it;
  }
  return acc;
}

namespace {

int nonzero_terms(const QNumPoly& p) {
  int count = 0;
  for (const auto& c : p.coeffs()) {
    if (c != 0) ++count;
  }
  return count;
}

// Renders a coefficient so that "<coeff>*x^k" needs no extra parentheses:
// single q-terms with positive sign pass through, everything else is wrapped.
std::string coefficient_string(const QRat& c) {
  const std::string s = c.to_string();
  if (c.den().is_one() && nonzero_terms(c.num()) == 1 &&
      c.num().leading() > 0) {
    return s;
  }
  return "(" + s + ")";
}

}  // namespace

std::string XPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const QRat& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;

    // Pull the sign out of plain single-term coefficients so the output reads
    // "... - 1/2*x" rather than "... + (-1/2)*x".
    bool negative = false;
    QRat body_coeff = c;
    if (c.den().is_one() && nonzero_terms(c.num()) == 1 &&
        c.num().leading() < 0) {
      negative = true;
      body_coeff = -c;
    }

    std::string body;
    if (k == 0) {
      body = body_coeff.is_one() ? "1" : coefficient_string(body_coeff);
    } else {
      const std::string power = k == 1 ? "x" : "x^" + std::to_string(k);
      body = body_coeff.is_one() ? power
                                 : coefficient_string(body_coeff) + "*" + power;
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

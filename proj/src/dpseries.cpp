#include "qumbral/dpseries.hpp"

#include <utility>

#include "qumbral/errors.hpp"
#include "qumbral/qcomb.hpp"

namespace qumbral {

DPSeries::DPSeries(int truncation) {
  if (truncation < 0) throw OutOfRange("negative truncation order");
  a_.assign(static_cast<std::size_t>(truncation) + 1, QRat());
}

DPSeries::DPSeries(int truncation, std::vector<QRat> dp_coeffs)
    : DPSeries(truncation) {
  if (static_cast<int>(dp_coeffs.size()) > truncation + 1) {
    throw OutOfRange("more coefficients than the truncation order admits");
  }
  for (std::size_t k = 0; k < dp_coeffs.size(); ++k) {
    a_[k] = std::move(dp_coeffs[k]);
  }
}

DPSeries DPSeries::constant(const QRat& value, int truncation) {
  DPSeries f(truncation);
  f.a_[0] = value;
  return f;
}

DPSeries DPSeries::one(int truncation) {
  return constant(QRat(1), truncation);
}

DPSeries DPSeries::t(int truncation) {
  // t = [1]_q! * t^1/[1]_q!, so its only divided-power coefficient is a_1 = 1.
  if (truncation < 1) throw TruncationTooSmall("t needs truncation >= 1");
  DPSeries f(truncation);
  f.a_[1] = QRat(1);
  return f;
}

DPSeries DPSeries::eq_exponential(int truncation) {
  DPSeries f(truncation);
  for (auto& c : f.a_) c = QRat(1);
  return f;
}

const QRat& DPSeries::coeff(int k) const {
  if (k < 0 || k > truncation()) throw OutOfRange("series index out of range");
  return a_[static_cast<std::size_t>(k)];
}

std::optional<int> DPSeries::order() const {
  for (std::size_t k = 0; k < a_.size(); ++k) {
    if (!a_[k].is_zero()) return static_cast<int>(k);
  }
  return std::nullopt;
}

namespace {

void require_same_truncation(const DPSeries& f, const DPSeries& g) {
  if (f.truncation() != g.truncation()) {
    throw OrderMismatch("series truncation orders differ");
  }
}

}  // namespace

DPSeries operator+(const DPSeries& f, const DPSeries& g) {
  require_same_truncation(f, g);
  DPSeries out(f.truncation());
  for (std::size_t k = 0; k < out.a_.size(); ++k) {
    out.a_[k] = f.a_[k] + g.a_[k];
  }
  return out;
}

DPSeries operator-(const DPSeries& f, const DPSeries& g) {
  require_same_truncation(f, g);
  DPSeries out(f.truncation());
  for (std::size_t k = 0; k < out.a_.size(); ++k) {
    out.a_[k] = f.a_[k] - g.a_[k];
  }
  return out;
}

DPSeries operator*(const DPSeries& f, const DPSeries& g) {
  require_same_truncation(f, g);
  DPSeries out(f.truncation());
  for (int n = 0; n <= out.truncation(); ++n) {
    QRat sum;
    for (int k = 0; k <= n; ++k) {
      const QRat& a = f.a_[static_cast<std::size_t>(k)];
      const QRat& b = g.a_[static_cast<std::size_t>(n - k)];
      if (a.is_zero() || b.is_zero()) continue;
      sum += QRat(q_binomial(n, k)) * a * b;
    }
    out.a_[static_cast<std::size_t>(n)] = std::move(sum);
  }
  return out;
}

DPSeries DPSeries::operator-() const {
  DPSeries out(truncation());
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = -a_[k];
  return out;
}

DPSeries DPSeries::scaled(const QRat& s) const {
  DPSeries out(truncation());
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * s;
  return out;
}

DPSeries DPSeries::inverted() const {
  const QRat& a0 = a_[0];
  if (a0.is_zero()) {
    throw NotInvertible("series with zero constant term");
  }
  DPSeries out(truncation());
  const QRat inv_a0 = a0.inverse();
  out.a_[0] = inv_a0;
  for (int n = 1; n <= truncation(); ++n) {
    QRat sum;
    for (int k = 0; k < n; ++k) {
      const QRat& b = out.a_[static_cast<std::size_t>(k)];
      const QRat& a = a_[static_cast<std::size_t>(n - k)];
      if (b.is_zero() || a.is_zero()) continue;
      sum += QRat(q_binomial(n, k)) * b * a;
    }
    out.a_[static_cast<std::size_t>(n)] = (-sum) * inv_a0;
  }
  return out;
}

DPSeries DPSeries::power(int r) const {
  if (r < 0) throw OutOfRange("negative series power");
  DPSeries out = one(truncation());
  for (int i = 0; i < r; ++i) out = out * *this;
  return out;
}

DPSeries DPSeries::shifted_down() const {
  if (truncation() < 1) {
    throw TruncationTooSmall("t-division needs truncation >= 1");
  }
  if (!a_[0].is_zero()) {
    throw NotDivisible("constant term must vanish for t-division");
  }
  DPSeries out(truncation() - 1);
  for (int j = 0; j <= out.truncation(); ++j) {
    out.a_[static_cast<std::size_t>(j)] =
        a_[static_cast<std::size_t>(j) + 1] / QRat(q_int(j + 1));
  }
  return out;
}

}  // namespace qumbral

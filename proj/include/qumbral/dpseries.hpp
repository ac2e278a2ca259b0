#pragma once

#include <optional>
#include <vector>

#include "qumbral/qrat.hpp"

namespace qumbral {

// Truncated divided-power series over Q(q):
//
//   f(t) = sum_{k=0}^{N} a_k t^k / [k]_q!
//
// stored as the coefficient list (a_0, ..., a_N) with N = truncation().
// In this basis the product picks up Gaussian binomials,
//
//   (f g)_n = sum_{k=0}^{n} C(n,k)_q a_k b_{n-k},
//
// which is exactly the convolution the q-exponential generating functions
// below require.  Arithmetic demands matching truncations (OrderMismatch).
class DPSeries {
 public:
  explicit DPSeries(int truncation);                       // zero series
  DPSeries(int truncation, std::vector<QRat> dp_coeffs);   // pads with zeros

  static DPSeries constant(const QRat& value, int truncation);
  static DPSeries one(int truncation);
  static DPSeries t(int truncation);
  // e_q(t) = sum t^k/[k]_q!: every divided-power coefficient is 1.
  static DPSeries eq_exponential(int truncation);

  int truncation() const { return static_cast<int>(a_.size()) - 1; }
  const QRat& coeff(int k) const;            // pre: 0 <= k <= truncation
  const std::vector<QRat>& coeffs() const { return a_; }

  // Index of the first nonzero coefficient; nullopt for the zero series.
  std::optional<int> order() const;

  friend DPSeries operator+(const DPSeries& f, const DPSeries& g);
  friend DPSeries operator-(const DPSeries& f, const DPSeries& g);
  friend DPSeries operator*(const DPSeries& f, const DPSeries& g);
  DPSeries operator-() const;
  friend bool operator==(const DPSeries& f, const DPSeries& g) = default;

  DPSeries scaled(const QRat& s) const;

  // Multiplicative inverse by the triangular recurrence
  //   b_n = (delta_{n,0} - sum_{k<n} C(n,k)_q b_k a_{n-k}) / a_0.
  // Throws NotInvertible when a_0 = 0.
  DPSeries inverted() const;

  // r-fold product; power(0) is the constant 1.  Requires r >= 0.
  DPSeries power(int r) const;

  // Exact division by t: requires a_0 = 0 (else NotDivisible) and truncation
  // >= 1 (else TruncationTooSmall); result has truncation N-1 and
  // coefficients g_j = a_{j+1} / [j+1]_q.
  DPSeries shifted_down() const;

 private:
  std::vector<QRat> a_;
};

}  // namespace qumbral

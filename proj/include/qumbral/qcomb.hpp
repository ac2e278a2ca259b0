#pragma once

#include <vector>

#include "qumbral/qrat.hpp"

namespace qumbral {

// Weak composition: a fixed-length tuple of non-negative integers.
struct Composition {
  std::vector<int> parts;

  int sum() const;
  friend bool operator==(const Composition& a, const Composition& b) = default;
};

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.  Requires n >= 0.
QNumPoly q_int(int n);

// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.  Memoized.
QNumPoly q_factorial(int n);

// Gaussian binomial [n]_q! / ([k]_q! [n-k]_q!); zero outside 0 <= k <= n.
// Always an exact polynomial quotient.  Memoized.
QNumPoly q_binomial(int n, int k);

// q-multinomial [n]_q! / prod_j [i_j]_q!.  Throws SumMismatch unless the
// parts sum to n.  Memoized up to reordering of the parts.
QNumPoly q_multinomial(int n, const Composition& parts);

// (a : q)_n = prod_{i=0}^{n-1} (1 - a q^i).  Empty product for n = 0.
QRat q_shifted_factorial(const QRat& a, int n);

// Enumerates every length-`length` weak composition of `total`, ordered
// lexicographically on the tuple read left to right.  For length 0 there is
// one (empty) composition exactly when total = 0.
class CompositionEnumerator {
 public:
  CompositionEnumerator(int total, int length);

  // Writes the next tuple into `out`; returns false once exhausted.
  bool next(Composition& out);

 private:
  int total_;
  int length_;
  bool done_;
  bool started_;
  std::vector<int> parts_;
};

// All of the above in one vector, in enumeration order.
std::vector<Composition> compositions(int total, int length);

}  // namespace qumbral

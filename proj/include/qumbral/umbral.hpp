#pragma once

#include <optional>
#include <vector>

#include "qumbral/dpseries.hpp"
#include "qumbral/xpoly.hpp"

namespace qumbral {

// The pairing <f | p> between a divided-power series and a polynomial,
// determined by <t^k | x^n> = [n]_q! delta_{n,k} and linearity.  In
// divided-power coordinates it collapses to <f | p> = sum_k a_k p_k (the
// series t^k itself has a_k = [k]_q!, which is where the factorial lives).
// Requires truncation(f) >= deg(p) (TruncationTooSmall otherwise).
QRat pair(const DPSeries& f, const XPoly& p);

// The action of f on polynomials: apply(f, p) = sum_k (a_k/[k]_q!) D_q^k p.
// Adjoint to multiplication on the series side: <f g | p> = <f | apply(g, p)>.
// Same truncation precondition as pair().
XPoly apply(const DPSeries& f, const XPoly& p);

struct ShefferViolation {
  int n;
  int k;
  QRat got;
  QRat expected;
};

// Checks the biorthogonality <g t^k | S_n> = [n]_q! delta_{n,k} for all
// 0 <= n, k <= n_max over the members S_0..S_{n_max}; returns the first
// violating pair, or nullopt when the family is Sheffer for (g, t).
// Requires members.size() > n_max and truncation(g) >= n_max.
std::optional<ShefferViolation> sheffer_violation(
    const DPSeries& g, const std::vector<XPoly>& members, int n_max);

bool sheffer_check(const DPSeries& g, const std::vector<XPoly>& members,
                   int n_max);

// Coefficients b_0..b_n (n = deg p; empty for p = 0) expanding p in the
// q-Euler basis:
//
//   b_k = ( (D_q^k p)(1) + (D_q^k p)(0) ) / (2 [k]_q!).
std::vector<QRat> expand_in_euler(const XPoly& p);

// W_r(m) = sum_{l=0}^{r} C(r,l) sum_{i_1+...+i_l=m} (m; i_1..i_l)_q: plain
// binomial times q-multinomial composition sums.  This is the m-th
// divided-power coefficient of (e_q(t) + 1)^r.
QNumPoly order_weight(int r, int m);

// Coefficients expanding p in the order-r q-Euler basis (r >= 1):
//
//   b_k = 1/(2^r [k]_q!) * sum_{m=0}^{n-k} W_r(m)/[m]_q! * (D_q^{m+k} p)(0),
//
// with the order weights W_r above.
std::vector<QRat> expand_in_euler_r(const XPoly& p, int r);

}  // namespace qumbral

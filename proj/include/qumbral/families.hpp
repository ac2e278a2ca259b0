#pragma once

#include <string>
#include <vector>

#include "qumbral/dpseries.hpp"
#include "qumbral/xpoly.hpp"

namespace qumbral {

enum class FamilyKind { euler, bernoulli };
enum class BuildPath { series, recurrence, multinomial };

std::string to_string(FamilyKind kind);
std::string to_string(BuildPath path);

// A constructed Appell family: members S_0..S_{n_max} with S_n monic of
// degree n, numbers[n] = S_n(0), and path recording how the numbers were
// obtained.  order_r is 1 for the plain families.
struct PolyFamily {
  FamilyKind kind = FamilyKind::euler;
  int order_r = 1;
  BuildPath path = BuildPath::series;
  std::vector<XPoly> members;
  std::vector<QRat> numbers;

  int n_max() const { return static_cast<int>(members.size()) - 1; }
};

// (e_q(t) + 1) / 2 at the given truncation: the series g with E_n = <1/g ...>,
// i.e. whose inverse generates the q-Euler numbers.
DPSeries euler_level_series(int truncation);

// (e_q(t) - 1) / t at the given truncation (input order truncation + 1 is
// formed internally), whose inverse generates the q-Bernoulli numbers.
DPSeries bernoulli_level_series(int truncation);

// q-Euler numbers E_0..E_{n_max} by inverting (e_q(t)+1)/2.
std::vector<QRat> euler_numbers_series(int n_max);

// Same numbers by the boundary recurrence E_0 = 1,
// E_n = -(1/2) sum_{l<n} C(n,l)_q E_l.
std::vector<QRat> euler_numbers_recurrence(int n_max);

// q-Bernoulli numbers by series inversion of (e_q(t)-1)/t, or by the
// recurrence B_0 = 1, B_m = -(1/[m+1]_q) sum_{l<m} C(m+1,l)_q B_l.
// path must be series or recurrence.
std::vector<QRat> bernoulli_numbers(int n_max, BuildPath path);

// Appell assembly S_n(x) = sum_l C(n,l)_q numbers[n-l] x^l.
std::vector<XPoly> appell_members_from_numbers(
    const std::vector<QRat>& numbers);

PolyFamily euler_polys(int n_max);
PolyFamily bernoulli_polys(int n_max);

// Order-r q-Euler family.  path series: invert((e_q+1)/2)^r.  path
// multinomial: E^(r)_n = sum_{i_1+...+i_r=n} (n; i)_q E_{i_1} ... E_{i_r}.
// r >= 0 (order 0 is the monomial family x^n).
PolyFamily euler_r(int n_max, int r, BuildPath path);

// Order-r q-Bernoulli family, same two construction paths.
PolyFamily bernoulli_r(int n_max, int r, BuildPath path);

}  // namespace qumbral

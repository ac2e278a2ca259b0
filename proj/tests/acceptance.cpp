// Acceptance gate for the exact q-umbral library: eight criteria, each
// reported as a single PASS/FAIL line.  Every comparison is exact symbolic or
// exact rational equality; there are no tolerances anywhere.  Exits nonzero
// when any criterion fails.

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qumbral/errors.hpp"
#include "qumbral/families.hpp"
#include "qumbral/identities.hpp"
#include "qumbral/qcomb.hpp"
#include "qumbral/umbral.hpp"
#include "qumbral/xpoly.hpp"

using namespace qumbral;

namespace {

QRat qpoly(std::vector<long> coeffs) {
  std::vector<BigRat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return QRat(QNumPoly(std::move(c)));
}

// ---------------------------------------------------------------------------
// 1. Exact base values, both construction paths, first members frozen.

bool base_values(std::string& detail) {
  const std::vector<QRat> expected_euler = {
      QRat(1),
      QRat(BigRat(-1, 2)),
      qpoly({-1, 1}) * QRat(BigRat(1, 4)),        // (q-1)/4
      qpoly({-1, 2, 2, -1}) * QRat(BigRat(1, 8)), // (-1+2q+2q^2-q^3)/8
  };
  const std::vector<QRat> expected_bernoulli = {
      QRat(1),
      QRat(-1) / QRat(q_int(2)),
      QRat(QNumPoly::monomial(2)) / QRat(q_int(3) * q_int(2)),
  };
  const std::vector<std::vector<QRat>> euler_paths = {
      euler_numbers_series(3), euler_numbers_recurrence(3)};
  for (const auto& numbers : euler_paths) {
    for (std::size_t n = 0; n < expected_euler.size(); ++n) {
      if (numbers[n] != expected_euler[n]) {
        detail = "q-Euler number " + std::to_string(n) + " = " +
                 numbers[n].to_string();
        return false;
      }
    }
  }
  for (BuildPath path : {BuildPath::series, BuildPath::recurrence}) {
    const std::vector<QRat> numbers = bernoulli_numbers(2, path);
    for (std::size_t n = 0; n < expected_bernoulli.size(); ++n) {
      if (numbers[n] != expected_bernoulli[n]) {
        detail = "q-Bernoulli number " + std::to_string(n) + " = " +
                 numbers[n].to_string();
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 2. Dual-path equivalence: series inversion against the boundary recurrences
//    (n <= 12) and against the q-multinomial convolution (n <= 10, r <= 4).

bool dual_paths(std::string& detail) {
  if (euler_numbers_series(12) != euler_numbers_recurrence(12)) {
    detail = "q-Euler series vs recurrence path";
    return false;
  }
  if (bernoulli_numbers(12, BuildPath::series) !=
      bernoulli_numbers(12, BuildPath::recurrence)) {
    detail = "q-Bernoulli series vs recurrence path";
    return false;
  }
  for (int r = 0; r <= 4; ++r) {
    if (euler_r(10, r, BuildPath::series).numbers !=
        euler_r(10, r, BuildPath::multinomial).numbers) {
      detail = "order-" + std::to_string(r) + " q-Euler paths";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 3. The full identity catalog passes at its contract bounds: single-variable
//    entries at n = 12, the integral-grid entry at n = 8, order-r entries at
//    (n, r) = (10, 4).

struct EntryBounds {
  int n_max;
  int r_max;
};

EntryBounds bounds_for(const std::string& id) {
  if (id == "eq26") return {8, 0};
  if (id == "thm5" || id == "eq51" || id == "thm6" || id == "thm7" ||
      id == "thm8" || id == "thm9" || id == "sheffer") {
    return {10, 4};
  }
  return {12, 0};
}

bool run_catalog(const VerifyOptions& opts, std::string& detail) {
  const VerifyContext single(12, 0);
  const VerifyContext grid(8, 0);
  const VerifyContext order(10, 4);
  for (const std::string& id : identity_catalog()) {
    const EntryBounds b = bounds_for(id);
    const VerifyContext& ctx =
        b.n_max == 8 ? grid : (b.r_max == 4 ? order : single);
    const IdentityReport report = verify(ctx, id, opts);
    if (!report.pass) {
      std::ostringstream out;
      const IdentityWitness& w = report.witnesses.front();
      out << id << " at n=" << w.n;
      if (w.r >= 0) out << ", r=" << w.r;
      out << ": " << w.lhs << " != " << w.rhs;
      detail = out.str();
      return false;
    }
  }
  return true;
}

bool full_catalog(std::string& detail) {
  return run_catalog(VerifyOptions{}, detail);
}

// ---------------------------------------------------------------------------
// 4. Biorthogonality <g t^k | S_n> = [n]_q! delta_{n,k} for the three
//    generating pairs, n, k <= 10, orders r <= 3.

bool biorthogonality(std::string& detail) {
  const int bound = 10;
  const auto describe = [&](const char* name,
                            const std::optional<ShefferViolation>& v) {
    if (!v) return true;
    detail = std::string(name) + " pair at (n, k) = (" + std::to_string(v->n) +
             ", " + std::to_string(v->k) + "): " + v->got.to_string() +
             " != " + v->expected.to_string();
    return false;
  };
  if (!describe("q-Euler",
                sheffer_violation(euler_level_series(bound),
                                  euler_polys(bound).members, bound))) {
    return false;
  }
  if (!describe("q-Bernoulli",
                sheffer_violation(bernoulli_level_series(bound),
                                  bernoulli_polys(bound).members, bound))) {
    return false;
  }
  const DPSeries level = euler_level_series(bound);
  for (int r = 0; r <= 3; ++r) {
    const std::string name = "order-" + std::to_string(r) + " q-Euler";
    if (!describe(name.c_str(),
                  sheffer_violation(level.power(r),
                                    euler_r(bound, r, BuildPath::series).members,
                                    bound))) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 5. q -> 1 degeneration against classical-recurrence oracles computed here,
//    independently of the library; only n <= 3 is pinned by hand.

BigRat classical_binom(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return BigRat(b);
}

bool classical_limits(std::string& detail) {
  const int bound = 12;
  std::vector<BigRat> euler_oracle{BigRat(1)};
  for (int n = 1; n <= bound; ++n) {
    BigRat sum(0);
    for (int l = 0; l < n; ++l) {
      sum += classical_binom(static_cast<unsigned>(n),
                             static_cast<unsigned>(l)) *
             euler_oracle[static_cast<std::size_t>(l)];
    }
    euler_oracle.push_back(sum / -2);
  }
  std::vector<BigRat> bernoulli_oracle{BigRat(1)};
  for (int m = 1; m <= bound; ++m) {
    BigRat sum(0);
    for (int l = 0; l < m; ++l) {
      sum += classical_binom(static_cast<unsigned>(m + 1),
                             static_cast<unsigned>(l)) *
             bernoulli_oracle[static_cast<std::size_t>(l)];
    }
    bernoulli_oracle.push_back(sum / -(m + 1));
  }

  // Hand-pinned prefixes (and only these): 1, -1/2, 0, 1/4 and
  // 1, -1/2, 1/6, 0.
  const std::vector<BigRat> euler_prefix = {BigRat(1), BigRat(-1, 2), BigRat(0),
                                            BigRat(1, 4)};
  const std::vector<BigRat> bernoulli_prefix = {BigRat(1), BigRat(-1, 2),
                                                BigRat(1, 6), BigRat(0)};
  for (std::size_t n = 0; n < euler_prefix.size(); ++n) {
    if (euler_oracle[n] != euler_prefix[n] ||
        bernoulli_oracle[n] != bernoulli_prefix[n]) {
      detail = "oracle recurrence drifts from the pinned prefix at n = " +
               std::to_string(n);
      return false;
    }
  }

  const std::vector<QRat> euler_q = euler_numbers_series(bound);
  const std::vector<QRat> bernoulli_q =
      bernoulli_numbers(bound, BuildPath::series);
  const BigRat one(1);
  for (int n = 0; n <= bound; ++n) {
    if (euler_q[static_cast<std::size_t>(n)].eval(one) !=
        euler_oracle[static_cast<std::size_t>(n)]) {
      detail = "q-Euler number " + std::to_string(n) + " at q = 1";
      return false;
    }
    if (bernoulli_q[static_cast<std::size_t>(n)].eval(one) !=
        bernoulli_oracle[static_cast<std::size_t>(n)]) {
      detail = "q-Bernoulli number " + std::to_string(n) + " at q = 1";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 6. Expansion coefficients reconstruct their input exactly for monomials,
//    q-Bernoulli polynomials, and order-r q-Bernoulli polynomials.

bool reconstructions(std::string& detail) {
  const auto rebuild = [](const std::vector<XPoly>& basis,
                          const std::vector<QRat>& coeffs) {
    XPoly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      out += basis[k].scaled(coeffs[k]);
    }
    return out;
  };

  const PolyFamily euler = euler_polys(10);
  const PolyFamily bernoulli = bernoulli_polys(10);
  for (int n = 0; n <= 10; ++n) {
    const XPoly monomial = XPoly::monomial(n);
    if (rebuild(euler.members, expand_in_euler(monomial)) != monomial) {
      detail = "x^" + std::to_string(n) + " over the q-Euler basis";
      return false;
    }
    const XPoly& b_n = bernoulli.members[static_cast<std::size_t>(n)];
    if (rebuild(euler.members, expand_in_euler(b_n)) != b_n) {
      detail = "q-Bernoulli member " + std::to_string(n) +
               " over the q-Euler basis";
      return false;
    }
  }
  for (int r = 1; r <= 3; ++r) {
    const PolyFamily basis = euler_r(8, r, BuildPath::series);
    const PolyFamily targets = bernoulli_r(8, r, BuildPath::series);
    for (int n = 0; n <= 8; ++n) {
      const XPoly& p = targets.members[static_cast<std::size_t>(n)];
      if (rebuild(basis.members, expand_in_euler_r(p, r)) != p) {
        detail = "order-" + std::to_string(r) + " q-Bernoulli member " +
                 std::to_string(n) + " over the order-r basis";
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 7. Mutation sensitivity: every single-coefficient corruption makes at least
//    one catalog entry fail with a witness at the corrupted index.

bool mutation_sensitivity(std::string& detail) {
  using T = Corruption::Target;
  const struct {
    T target;
    const char* name;
    bool order_target;
  } targets[] = {
      {T::euler_number, "euler-number", false},
      {T::euler_poly, "euler-poly", false},
      {T::bernoulli_number, "bernoulli-number", false},
      {T::bernoulli_poly, "bernoulli-poly", false},
      {T::euler_r_number, "euler-r-number", true},
      {T::euler_r_poly, "euler-r-poly", true},
      {T::bernoulli_r_number, "bernoulli-r-number", true},
      {T::bernoulli_r_poly, "bernoulli-r-poly", true},
  };
  for (const auto& target : targets) {
    for (int n = 1; n <= 5; ++n) {
      VerifyContext ctx(6, 2);
      Corruption c;
      c.target = target.target;
      c.order_r = target.order_target ? 2 : 1;
      c.n = n;
      c.coeff = 0;
      ctx.corrupt(c);
      bool localized = false;
      for (const IdentityReport& report : verify_all(ctx)) {
        if (report.pass) continue;
        for (const IdentityWitness& w : report.witnesses) {
          if (w.n == n) {
            localized = true;
            break;
          }
        }
        if (localized) break;
      }
      if (!localized) {
        detail = std::string(target.name) + " at n = " + std::to_string(n) +
                 " escaped the catalog";
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 8. Numeric homomorphism: the catalog still passes when both sides of every
//    comparison are specialized at q = 1/2, 2/3, 5/7.

bool numeric_specialization(std::string& detail) {
  VerifyOptions opts;
  opts.numeric_points = {BigRat(1, 2), BigRat(2, 3), BigRat(5, 7)};
  return run_catalog(opts, detail);
}

struct Criterion {
  int number;
  const char* summary;
  double budget_seconds;   // 0 = no stated budget
  bool (*run)(std::string&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "base q-Euler/q-Bernoulli values exact on both paths", 1.0,
       base_values},
      {2, "series, recurrence and multinomial paths agree", 60.0, dual_paths},
      {3, "full identity catalog passes at contract bounds", 300.0,
       full_catalog},
      {4, "biorthogonality for all three generating pairs", 0.0,
       biorthogonality},
      {5, "q -> 1 limits match the classical recurrences", 0.0,
       classical_limits},
      {6, "basis expansions reconstruct their inputs", 0.0, reconstructions},
      {7, "planted defects fail the catalog with localized witnesses", 0.0,
       mutation_sensitivity},
      {8, "catalog passes under rational q specialization", 0.0,
       numeric_specialization},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && criterion.budget_seconds > 0 &&
        seconds > criterion.budget_seconds) {
      ok = false;
      detail = "exceeded the " + std::to_string(criterion.budget_seconds) +
               " s budget";
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL",
                criterion.number, criterion.summary, seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

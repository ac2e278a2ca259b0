#include "qumbral/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "qumbral/errors.hpp"
#include "qumbral/qcomb.hpp"
#include "qumbral/umbral.hpp"

namespace qumbral {

namespace {

BigRat classical_binomial(int n, int k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return BigRat(b);
}

}  // namespace

std::vector<BigRat> classical_euler(int n_max) {
  std::vector<BigRat> numbers{BigRat(1)};
  for (int n = 1; n <= n_max; ++n) {
    BigRat sum(0);
    for (int l = 0; l < n; ++l) {
      sum += classical_binomial(n, l) * numbers[static_cast<std::size_t>(l)];
    }
    numbers.push_back(sum / -2);
  }
  return numbers;
}

std::vector<BigRat> classical_bernoulli(int n_max) {
  std::vector<BigRat> numbers{BigRat(1)};
  for (int m = 1; m <= n_max; ++m) {
    BigRat sum(0);
    for (int l = 0; l < m; ++l) {
      sum += classical_binomial(m + 1, l) * numbers[static_cast<std::size_t>(l)];
    }
    numbers.push_back(sum / -(m + 1));
  }
  return numbers;
}

VerifyContext::VerifyContext(int n_max, int r_max)
    : n_max_(n_max), r_max_(r_max) {
  if (n_max < 0 || r_max < 0) {
    throw OutOfRange("verification bounds must be non-negative");
  }
  // One extra member so checkers may look one index ahead (antiderivatives,
  // E_{n+1}) without leaving the stored range.
  const int bound = n_max + 1;
  euler_ = euler_polys(bound);
  bernoulli_ = bernoulli_polys(bound);
  euler_r_.reserve(static_cast<std::size_t>(r_max) + 1);
  bernoulli_r_.reserve(static_cast<std::size_t>(r_max) + 1);
  for (int r = 0; r <= r_max; ++r) {
    euler_r_.push_back(qumbral::euler_r(bound, r, BuildPath::series));
    bernoulli_r_.push_back(qumbral::bernoulli_r(bound, r, BuildPath::series));
  }
}

const PolyFamily& VerifyContext::euler_r(int r) const {
  if (r < 0 || r > r_max_) throw OutOfRange("order outside built range");
  return euler_r_[static_cast<std::size_t>(r)];
}

const PolyFamily& VerifyContext::bernoulli_r(int r) const {
  if (r < 0 || r > r_max_) throw OutOfRange("order outside built range");
  return bernoulli_r_[static_cast<std::size_t>(r)];
}

PolyFamily& VerifyContext::family_for(Corruption::Target target, int order_r) {
  using T = Corruption::Target;
  switch (target) {
    case T::euler_number:
    case T::euler_poly:
      return euler_;
    case T::bernoulli_number:
    case T::bernoulli_poly:
      return bernoulli_;
    case T::euler_r_number:
    case T::euler_r_poly:
      if (order_r < 0 || order_r > r_max_) {
        throw OutOfRange("corruption order outside built range");
      }
      return euler_r_[static_cast<std::size_t>(order_r)];
    case T::bernoulli_r_number:
    case T::bernoulli_r_poly:
      if (order_r < 0 || order_r > r_max_) {
        throw OutOfRange("corruption order outside built range");
      }
      return bernoulli_r_[static_cast<std::size_t>(order_r)];
  }
  throw OutOfRange("unknown corruption target");
}

void VerifyContext::corrupt(const Corruption& c) {
  using T = Corruption::Target;
  PolyFamily& fam = family_for(c.target, c.order_r);
  if (c.n < 0 || c.n > fam.n_max()) {
    throw OutOfRange("corruption index outside built range");
  }
  const bool number_target =
      c.target == T::euler_number || c.target == T::bernoulli_number ||
      c.target == T::euler_r_number || c.target == T::bernoulli_r_number;
  if (number_target) {
    fam.numbers[static_cast<std::size_t>(c.n)] += c.delta;
    return;
  }
  if (c.coeff < 0 || c.coeff > c.n) {
    throw OutOfRange("corruption coefficient outside member degree");
  }
  std::vector<QRat> coeffs = fam.members[static_cast<std::size_t>(c.n)].coeffs();
  coeffs.resize(static_cast<std::size_t>(c.n) + 1, QRat());
  coeffs[static_cast<std::size_t>(c.coeff)] += c.delta;
  fam.members[static_cast<std::size_t>(c.n)] = XPoly(std::move(coeffs));
}

namespace {

// Collects witnesses for one catalog entry.  Symbolically equal pairs are
// additionally specialized at every requested rational q and must stay equal
// (poles skip the point).
class Check {
 public:
  explicit Check(const VerifyOptions& opts) : opts_(opts) {}

  void qrat(const QRat& lhs, const QRat& rhs, int n, int k = -1, int r = -1) {
    if (lhs != rhs) {
      add(n, k, r, lhs.to_string(), rhs.to_string());
      return;
    }
    for (const BigRat& point : opts_.numeric_points) {
      try {
        if (lhs.eval(point) != rhs.eval(point)) {
          add(n, k, r, tag(lhs.to_string(), point), tag(rhs.to_string(), point));
        }
      } catch (const PoleError&) {
        // The cross-check only applies off the poles.
      }
    }
  }

  void xpoly(const XPoly& lhs, const XPoly& rhs, int n, int k = -1,
             int r = -1) {
    if (lhs != rhs) {
      add(n, k, r, lhs.to_string(), rhs.to_string());
      return;
    }
    for (const BigRat& point : opts_.numeric_points) {
      const int degree = std::max(lhs.degree(), rhs.degree());
      for (int j = 0; j <= degree; ++j) {
        try {
          if (lhs.coeff(j).eval(point) != rhs.coeff(j).eval(point)) {
            add(n, k, r, tag(lhs.to_string(), point),
                tag(rhs.to_string(), point));
            return;
          }
        } catch (const PoleError&) {
        }
      }
    }
  }

  void scalar(const BigRat& lhs, const BigRat& rhs, int n, int k = -1,
              int r = -1) {
    if (lhs != rhs) {
      add(n, k, r, qumbral::to_string(lhs), qumbral::to_string(rhs));
    }
  }

  std::vector<IdentityWitness> take() { return std::move(witnesses_); }

 private:
  static std::string tag(std::string side, const BigRat& point) {
    return side + " @ q=" + qumbral::to_string(point);
  }

  void add(int n, int k, int r, std::string lhs, std::string rhs) {
    witnesses_.push_back({n, k, r, std::move(lhs), std::move(rhs)});
  }

  const VerifyOptions& opts_;
  std::vector<IdentityWitness> witnesses_;
};

// --- catalog entries ------------------------------------------------------

// E_n(1) + E_n = 2 [n = 0].
void check_eq18(const VerifyContext& ctx, Check& c) {
  const PolyFamily& fam = ctx.euler();
  for (int n = 0; n <= ctx.n_max(); ++n) {
    const QRat lhs =
        fam.members[static_cast<std::size_t>(n)].eval(QRat(1)) +
        fam.numbers[static_cast<std::size_t>(n)];
    c.qrat(lhs, n == 0 ? QRat(2) : QRat(), n);
  }
}

// Series-inverted q-Euler numbers match the boundary recurrence.
void check_lemma1(const VerifyContext& ctx, Check& c) {
  const std::vector<QRat> recurrence = euler_numbers_recurrence(ctx.n_max());
  for (int n = 0; n <= ctx.n_max(); ++n) {
    c.qrat(ctx.euler().numbers[static_cast<std::size_t>(n)],
           recurrence[static_cast<std::size_t>(n)], n);
  }
}

// <(e_q(t)-1)/t | E_n(x)> equals the Jackson integral of E_n over [0, 1].
void check_thm2(const VerifyContext& ctx, Check& c) {
  const DPSeries functional = bernoulli_level_series(ctx.n_max());
  for (int n = 0; n <= ctx.n_max(); ++n) {
    const XPoly& e_n = ctx.euler().members[static_cast<std::size_t>(n)];
    c.qrat(pair(functional, e_n), e_n.jackson_integral(QRat(), QRat(1)), n);
  }
}

// int_x^{x+y} E_n = (E_{n+1}(x+y) - E_{n+1}(x)) / [n+1]_q, checked exactly on
// an (n+2) x (n+2) rational grid; witness (k, r) is the (x, y) grid index.
void check_eq26(const VerifyContext& ctx, Check& c) {
  for (int n = 0; n <= ctx.n_max(); ++n) {
    const XPoly& e_n = ctx.euler().members[static_cast<std::size_t>(n)];
    const XPoly& e_next = ctx.euler().members[static_cast<std::size_t>(n) + 1];
    const XPoly antiderivative = e_n.jackson_antiderivative();
    const QRat inv_qint = QRat(q_int(n + 1)).inverse();
    for (int i = 0; i <= n + 1; ++i) {
      for (int j = 0; j <= n + 1; ++j) {
        const QRat x_val{BigRat(i)};
        const QRat upper{BigRat(i + j)};
        const QRat lhs = antiderivative.eval(upper) - antiderivative.eval(x_val);
        const QRat rhs = (e_next.eval(upper) - e_next.eval(x_val)) * inv_qint;
        c.qrat(lhs, rhs, n, i, j);
      }
    }
  }
}

// Expansion in the q-Euler basis reconstructs p, for p = x^n and p = B_n(x);
// for the latter the coefficients also match their boundary closed form.
void check_thm3(const VerifyContext& ctx, Check& c) {
  const PolyFamily& euler = ctx.euler();
  const PolyFamily& bern = ctx.bernoulli();
  const QRat half(BigRat(1, 2));
  for (int n = 0; n <= ctx.n_max(); ++n) {
    {
      const XPoly p = XPoly::monomial(n);
      const std::vector<QRat> b = expand_in_euler(p);
      XPoly recon;
      for (int k = 0; k <= n; ++k) {
        recon += euler.members[static_cast<std::size_t>(k)].scaled(
            b[static_cast<std::size_t>(k)]);
      }
      c.xpoly(recon, p, n);
    }
    {
      const XPoly& p = bern.members[static_cast<std::size_t>(n)];
      const std::vector<QRat> b = expand_in_euler(p);
      XPoly recon;
      for (int k = 0; k <= n; ++k) {
        recon += euler.members[static_cast<std::size_t>(k)].scaled(
            b[static_cast<std::size_t>(k)]);
      }
      c.xpoly(recon, p, n);
      for (int k = 0; k <= n; ++k) {
        const std::size_t diff = static_cast<std::size_t>(n - k);
        const QRat closed = half * QRat(q_binomial(n, k)) *
                            (bern.members[diff].eval(QRat(1)) + bern.numbers[diff]);
        c.qrat(b[static_cast<std::size_t>(k)], closed, n, k);
      }
    }
  }
}

// B_n(x) = E_n(x) + [n]_q (q-1)/(2 [2]_q) E_{n-1}(x)
//          + sum_{k=0}^{n-2} C(n,k)_q B_{n-k} E_k(x)  for n >= 2.
void check_thm4(const VerifyContext& ctx, Check& c) {
  const PolyFamily& euler = ctx.euler();
  const PolyFamily& bern = ctx.bernoulli();
  const QRat q_minus_one(QNumPoly(std::vector<BigRat>{BigRat(-1), BigRat(1)}));
  for (int n = 2; n <= ctx.n_max(); ++n) {
    const QRat middle = QRat(q_int(n)) * q_minus_one /
                        (QRat(2) * QRat(q_int(2)));
    XPoly rhs = euler.members[static_cast<std::size_t>(n)] +
                euler.members[static_cast<std::size_t>(n) - 1].scaled(middle);
    for (int k = 0; k <= n - 2; ++k) {
      rhs += euler.members[static_cast<std::size_t>(k)].scaled(
          QRat(q_binomial(n, k)) * bern.numbers[static_cast<std::size_t>(n - k)]);
    }
    c.xpoly(bern.members[static_cast<std::size_t>(n)], rhs, n);
  }
}

// B_0 = 1 and B_n(1) - B_n = [n = 1].
void check_eq37(const VerifyContext& ctx, Check& c) {
  const PolyFamily& bern = ctx.bernoulli();
  c.qrat(bern.numbers[0], QRat(1), 0);
  for (int n = 0; n <= ctx.n_max(); ++n) {
    const QRat lhs =
        bern.members[static_cast<std::size_t>(n)].eval(QRat(1)) -
        bern.numbers[static_cast<std::size_t>(n)];
    c.qrat(lhs, n == 1 ? QRat(1) : QRat(), n);
  }
}

// E^(r)_n = sum over weak compositions (i_1..i_r) of n of
// (n; i)_q E_{i_1} ... E_{i_r}.
void check_thm5(const VerifyContext& ctx, Check& c) {
  const std::vector<QRat>& base = ctx.euler().numbers;
  for (int r = 0; r <= ctx.r_max(); ++r) {
    const PolyFamily& fam = ctx.euler_r(r);
    for (int n = 0; n <= ctx.n_max(); ++n) {
      QRat sum;
      CompositionEnumerator gen(n, r);
      Composition comp;
      while (gen.next(comp)) {
        QRat term = QRat(q_multinomial(n, comp));
        for (int part : comp.parts) {
          term *= base[static_cast<std::size_t>(part)];
        }
        sum += term;
      }
      c.qrat(fam.numbers[static_cast<std::size_t>(n)], sum, n, -1, r);
    }
  }
}

// E^(r)_n(1) + E^(r)_n = 2 E^(r-1)_n.
void check_eq51(const VerifyContext& ctx, Check& c) {
  for (int r = 1; r <= ctx.r_max(); ++r) {
    const PolyFamily& fam = ctx.euler_r(r);
    const PolyFamily& lower = ctx.euler_r(r - 1);
    for (int n = 0; n <= ctx.n_max(); ++n) {
      const QRat lhs =
          fam.members[static_cast<std::size_t>(n)].eval(QRat(1)) +
          fam.numbers[static_cast<std::size_t>(n)];
      c.qrat(lhs, QRat(2) * lower.numbers[static_cast<std::size_t>(n)], n, -1,
             r);
    }
  }
}

// E^(r)_n(x) = sum_k C(n,k)_q E^(r-1)_{n-k} E_k(x).
void check_thm6(const VerifyContext& ctx, Check& c) {
  const PolyFamily& euler = ctx.euler();
  for (int r = 1; r <= ctx.r_max(); ++r) {
    const PolyFamily& fam = ctx.euler_r(r);
    const PolyFamily& lower = ctx.euler_r(r - 1);
    for (int n = 0; n <= ctx.n_max(); ++n) {
      XPoly rhs;
      for (int k = 0; k <= n; ++k) {
        rhs += euler.members[static_cast<std::size_t>(k)].scaled(
            QRat(q_binomial(n, k)) *
            lower.numbers[static_cast<std::size_t>(n - k)]);
      }
      c.xpoly(fam.members[static_cast<std::size_t>(n)], rhs, n, -1, r);
    }
  }
}

// Expansion in the order-r q-Euler basis reconstructs p, for p = x^n,
// p = E_n(x) and p = B^(r)_n(x).
void check_thm7(const VerifyContext& ctx, Check& c) {
  for (int r = 1; r <= ctx.r_max(); ++r) {
    const PolyFamily& basis = ctx.euler_r(r);
    for (int n = 0; n <= ctx.n_max(); ++n) {
      const XPoly monomial = XPoly::monomial(n);
      const XPoly* polys[3] = {
          &monomial,
          &ctx.euler().members[static_cast<std::size_t>(n)],
          &ctx.bernoulli_r(r).members[static_cast<std::size_t>(n)],
      };
      for (const XPoly* p : polys) {
        const std::vector<QRat> b = expand_in_euler_r(*p, r);
        XPoly recon;
        for (std::size_t k = 0; k < b.size(); ++k) {
          recon += basis.members[k].scaled(b[k]);
        }
        c.xpoly(recon, *p, n, -1, r);
      }
    }
  }
}

// Shared engine for the two closed-form re-expansions: rebuilds
// sum_k c_k E^(r)_k(x) with
//   c_k = 2^{-r} sum_m W_r(m) C(m+k,m)_q C(n,m+k)_q numbers[n-m-k]
// and compares it against target[n].
void check_order_reexpansion(const VerifyContext& ctx, Check& c,
                             const std::vector<XPoly>& targets,
                             const std::vector<QRat>& numbers) {
  for (int r = 0; r <= ctx.r_max(); ++r) {
    const PolyFamily& basis = ctx.euler_r(r);
    BigRat half_power(1);
    for (int i = 0; i < r; ++i) half_power /= 2;
    std::vector<QNumPoly> weights;
    for (int m = 0; m <= ctx.n_max(); ++m) {
      weights.push_back(order_weight(r, m));
    }
    for (int n = 0; n <= ctx.n_max(); ++n) {
      XPoly rhs;
      for (int k = 0; k <= n; ++k) {
        QRat coeff;
        for (int m = 0; m + k <= n; ++m) {
          const QRat& num = numbers[static_cast<std::size_t>(n - m - k)];
          if (num.is_zero()) continue;
          coeff += QRat(weights[static_cast<std::size_t>(m)] *
                        q_binomial(m + k, m) * q_binomial(n, m + k)) *
                   num;
        }
        if (coeff.is_zero()) continue;
        rhs += basis.members[static_cast<std::size_t>(k)].scaled(
            coeff * QRat(half_power));
      }
      c.xpoly(targets[static_cast<std::size_t>(n)], rhs, n, -1, r);
    }
  }
}

// E_n(x) over the order-r basis with q-Euler-number coefficients.
void check_thm8(const VerifyContext& ctx, Check& c) {
  check_order_reexpansion(ctx, c, ctx.euler().members, ctx.euler().numbers);
}

// B^(r)_n(x) over the order-r basis with order-r q-Bernoulli coefficients.
void check_thm9(const VerifyContext& ctx, Check& c) {
  for (int r = 0; r <= ctx.r_max(); ++r) {
    const PolyFamily& basis = ctx.euler_r(r);
    const PolyFamily& target = ctx.bernoulli_r(r);
    BigRat half_power(1);
    for (int i = 0; i < r; ++i) half_power /= 2;
    std::vector<QNumPoly> weights;
    for (int m = 0; m <= ctx.n_max(); ++m) {
      weights.push_back(order_weight(r, m));
    }
    for (int n = 0; n <= ctx.n_max(); ++n) {
      XPoly rhs;
      for (int k = 0; k <= n; ++k) {
        QRat coeff;
        for (int m = 0; m + k <= n; ++m) {
          const QRat& num = target.numbers[static_cast<std::size_t>(n - m - k)];
          if (num.is_zero()) continue;
          coeff += QRat(weights[static_cast<std::size_t>(m)] *
                        q_binomial(m + k, m) * q_binomial(n, m + k)) *
                   num;
        }
        if (coeff.is_zero()) continue;
        rhs += basis.members[static_cast<std::size_t>(k)].scaled(
            coeff * QRat(half_power));
      }
      c.xpoly(target.members[static_cast<std::size_t>(n)], rhs, n, -1, r);
    }
  }
}

// Biorthogonality <g t^k | S_n> = [n]_q! delta_{n,k} for all three generating
// pairs; witness r is -1 for the plain Euler pair, -2 for the Bernoulli pair,
// and the order for the order-r pairs.
void check_sheffer(const VerifyContext& ctx, Check& c) {
  const int n_max = ctx.n_max();
  const auto report = [&](const std::optional<ShefferViolation>& v, int r) {
    if (v) c.qrat(v->got, v->expected, v->n, v->k, r);
  };
  report(sheffer_violation(euler_level_series(n_max), ctx.euler().members,
                           n_max),
         -1);
  report(sheffer_violation(bernoulli_level_series(n_max),
                           ctx.bernoulli().members, n_max),
         -2);
  const DPSeries level = euler_level_series(n_max);
  for (int r = 0; r <= ctx.r_max(); ++r) {
    report(sheffer_violation(level.power(r), ctx.euler_r(r).members, n_max), r);
  }
}

// q = 1 degeneration against the classical Euler/Bernoulli recurrences.
void check_q1_limits(const VerifyContext& ctx, Check& c) {
  const std::vector<BigRat> euler_classical = classical_euler(ctx.n_max());
  const std::vector<BigRat> bernoulli_classical =
      classical_bernoulli(ctx.n_max());
  const BigRat one(1);
  for (int n = 0; n <= ctx.n_max(); ++n) {
    c.scalar(ctx.euler().numbers[static_cast<std::size_t>(n)].eval(one),
             euler_classical[static_cast<std::size_t>(n)], n, 0);
    c.scalar(ctx.bernoulli().numbers[static_cast<std::size_t>(n)].eval(one),
             bernoulli_classical[static_cast<std::size_t>(n)], n, 1);
  }
}

struct CatalogEntry {
  const char* id;
  const char* description;
  void (*fn)(const VerifyContext&, Check&);
};

const CatalogEntry kCatalog[] = {
    {"eq18", "q-Euler boundary values: E_n(1) + E_n = 2*[n=0]", check_eq18},
    {"lemma1", "q-Euler numbers: series inversion vs boundary recurrence",
     check_lemma1},
    {"thm2", "<(e_q(t)-1)/t | E_n(x)> equals the Jackson integral of E_n over "
             "[0,1]",
     check_thm2},
    {"eq26", "Jackson integral of E_n over [x, x+y] telescopes to E_{n+1}",
     check_eq26},
    {"thm3", "q-Euler-basis expansion via boundary derivative data "
             "reconstructs p",
     check_thm3},
    {"thm4", "q-Bernoulli polynomials written in the q-Euler basis",
     check_thm4},
    {"eq37", "q-Bernoulli boundary values: B_0 = 1, B_n(1) - B_n = [n=1]",
     check_eq37},
    {"thm5", "order-r q-Euler numbers as q-multinomial convolutions",
     check_thm5},
    {"eq51", "E^(r)_n(1) + E^(r)_n = 2 E^(r-1)_n", check_eq51},
    {"thm6", "E^(r)_n(x) over order-(r-1) numbers and the q-Euler basis",
     check_thm6},
    {"thm7", "order-r q-Euler-basis expansion reconstructs p", check_thm7},
    {"thm8", "closed-form coefficients of E_n(x) in the order-r basis",
     check_thm8},
    {"thm9", "closed-form coefficients of B^(r)_n(x) in the order-r basis",
     check_thm9},
    {"sheffer", "biorthogonality <g t^k | S_n> = [n]_q! delta_{n,k} for all "
                "three generating pairs",
     check_sheffer},
    {"q1-limits", "q -> 1 degeneration to the classical Euler and Bernoulli "
                  "numbers",
     check_q1_limits},
};

const CatalogEntry& find_entry(const std::string& id) {
  for (const CatalogEntry& entry : kCatalog) {
    if (id == entry.id) return entry;
  }
  throw UnknownIdentity("no catalog entry named '" + id + "'");
}

IdentityReport run_entry(const VerifyContext& ctx, const CatalogEntry& entry,
                         const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Check check(opts);
  entry.fn(ctx, check);
  IdentityReport report;
  report.id = entry.id;
  report.n_max = ctx.n_max();
  report.r_max = ctx.r_max();
  report.witnesses = check.take();
  report.pass = report.witnesses.empty();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace

const std::vector<std::string>& identity_catalog() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const CatalogEntry& entry : kCatalog) out.emplace_back(entry.id);
    return out;
  }();
  return ids;
}

std::string identity_description(const std::string& id) {
  return find_entry(id).description;
}

IdentityReport verify(const VerifyContext& ctx, const std::string& id,
                      const VerifyOptions& opts) {
  return run_entry(ctx, find_entry(id), opts);
}

IdentityReport verify(const std::string& id, int n_max, int r_max,
                      const VerifyOptions& opts) {
  const VerifyContext ctx(n_max, r_max);
  return verify(ctx, id, opts);
}

std::vector<IdentityReport> verify_all(const VerifyContext& ctx,
                                       const VerifyOptions& opts) {
  const int entry_count = static_cast<int>(std::size(kCatalog));
  std::vector<IdentityReport> reports(static_cast<std::size_t>(entry_count));
  const int jobs = std::max(1, std::min(opts.jobs, entry_count));
  if (jobs == 1) {
    for (int i = 0; i < entry_count; ++i) {
      reports[static_cast<std::size_t>(i)] = run_entry(ctx, kCatalog[i], opts);
    }
    return reports;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= entry_count) return;
        try {
          reports[static_cast<std::size_t>(i)] =
              run_entry(ctx, kCatalog[i], opts);
        } catch (...) {
          std::scoped_lock guard(failure_lock);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& worker : workers) worker.join();
  if (failure) std::rethrow_exception(failure);
  return reports;
}

std::vector<IdentityReport> verify_all(int n_max, int r_max,
                                       const VerifyOptions& opts) {
  const VerifyContext ctx(n_max, r_max);
  return verify_all(ctx, opts);
}

}  // namespace qumbral

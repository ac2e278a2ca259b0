#pragma once

#include <string>
#include <vector>

#include "qumbral/families.hpp"

namespace qumbral {

// One exact-equality failure.  n is the member index; k and r refine it where
// the identity has a second index or an order (-1 when not applicable; eq26
// reports its rational grid point as (k, r) = (x index, y index)).  lhs/rhs
// carry the two printed sides.
struct IdentityWitness {
  int n = -1;
  int k = -1;
  int r = -1;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string id;
  int n_max = 0;
  int r_max = 0;
  bool pass = false;        // pass iff witnesses is empty
  std::vector<IdentityWitness> witnesses;
  double elapsed_ms = 0.0;
};

// Classical Euler numbers (values at 0 of the classical Euler polynomials):
// 1, -1/2, 0, 1/4, 0, -1/2, ... by the independent integer recurrence
// E_0 = 1, E_n = -(1/2) sum_{l<n} C(n,l) E_l.  This is the q -> 1 limit of
// the q-Euler numbers.
std::vector<BigRat> classical_euler(int n_max);

// Classical Bernoulli numbers 1, -1/2, 1/6, 0, -1/30, ... via
// B_m = -(1/(m+1)) sum_{l<m} C(m+1,l) B_l.
std::vector<BigRat> classical_bernoulli(int n_max);

// A single planted defect for mutation testing: adds delta to one stored
// coefficient of one family in a VerifyContext.  number targets ignore
// `coeff`; poly targets add delta to members[n]'s coefficient of x^coeff.
struct Corruption {
  enum class Target {
    euler_number,
    euler_poly,
    bernoulli_number,
    bernoulli_poly,
    euler_r_number,
    euler_r_poly,
    bernoulli_r_number,
    bernoulli_r_poly,
  };

  Target target = Target::euler_number;
  int order_r = 1;   // order-r targets only
  int n = 0;
  int coeff = 0;
  QRat delta = QRat(1);
};

// Everything the checkers read: the four family lines, all built by their
// primary (series) paths to one shared working bound.  Checkers recompute
// secondary paths (recurrences, multinomial sums, expansions, closed forms)
// on the fly, so corrupting the stored data here makes the corresponding
// identities fail with localized witnesses.
class VerifyContext {
 public:
  // Families are built out to member index n_max + 1 so checkers that look
  // one step ahead (shift-downs, E_{n+1}) stay inside the stored range.
  VerifyContext(int n_max, int r_max);

  int n_max() const { return n_max_; }
  int r_max() const { return r_max_; }

  const PolyFamily& euler() const { return euler_; }
  const PolyFamily& bernoulli() const { return bernoulli_; }
  const PolyFamily& euler_r(int r) const;      // 0 <= r <= r_max
  const PolyFamily& bernoulli_r(int r) const;

  void corrupt(const Corruption& c);

 private:
  PolyFamily& family_for(Corruption::Target target, int order_r);

  int n_max_;
  int r_max_;
  PolyFamily euler_;
  PolyFamily bernoulli_;
  std::vector<PolyFamily> euler_r_;
  std::vector<PolyFamily> bernoulli_r_;
};

struct VerifyOptions {
  // Extra numeric cross-check: every compared pair is also evaluated at each
  // of these rational q values (exact BigRat arithmetic) and must agree.
  std::vector<BigRat> numeric_points;
  // Worker threads for verify_all; 1 = sequential.  Report order is the
  // catalog order regardless.
  int jobs = 1;
};

// Catalog ids in fixed order.
const std::vector<std::string>& identity_catalog();

// One-line mathematical description of a catalog entry.
std::string identity_description(const std::string& id);

// Verifies one catalog entry against ctx.  Throws UnknownIdentity for ids
// outside the catalog.
IdentityReport verify(const VerifyContext& ctx, const std::string& id,
                      const VerifyOptions& opts = {});

// Convenience: builds a fresh context at (n_max, r_max) first.
IdentityReport verify(const std::string& id, int n_max, int r_max,
                      const VerifyOptions& opts = {});

// Runs the whole catalog against one shared context.
std::vector<IdentityReport> verify_all(const VerifyContext& ctx,
                                       const VerifyOptions& opts = {});
std::vector<IdentityReport> verify_all(int n_max, int r_max,
                                       const VerifyOptions& opts = {});

}  // namespace qumbral

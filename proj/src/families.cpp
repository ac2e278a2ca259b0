#include "qumbral/families.hpp"

#include <utility>

#include "qumbral/errors.hpp"
#include "qumbral/qcomb.hpp"

namespace qumbral {

std::string to_string(FamilyKind kind) {
  return kind == FamilyKind::euler ? "euler" : "bernoulli";
}

std::string to_string(BuildPath path) {
  switch (path) {
    case BuildPath::series: return "series";
    case BuildPath::recurrence: return "recurrence";
    case BuildPath::multinomial: return "multinomial";
  }
  return "?";
}

DPSeries euler_level_series(int truncation) {
  DPSeries e = DPSeries::eq_exponential(truncation);
  return (e + DPSeries::one(truncation)).scaled(QRat(BigRat(1, 2)));
}

DPSeries bernoulli_level_series(int truncation) {
  DPSeries e = DPSeries::eq_exponential(truncation + 1);
  return (e - DPSeries::one(truncation + 1)).shifted_down();
}

std::vector<QRat> euler_numbers_series(int n_max) {
  return euler_level_series(n_max).inverted().coeffs();
}

std::vector<QRat> euler_numbers_recurrence(int n_max) {
  std::vector<QRat> numbers;
  numbers.reserve(static_cast<std::size_t>(n_max) + 1);
  numbers.emplace_back(1);
  const QRat minus_half(BigRat(-1, 2));
  for (int n = 1; n <= n_max; ++n) {
    QRat sum;
    for (int l = 0; l < n; ++l) {
      sum += QRat(q_binomial(n, l)) * numbers[static_cast<std::size_t>(l)];
    }
    numbers.push_back(minus_half * sum);
  }
  return numbers;
}

std::vector<QRat> bernoulli_numbers(int n_max, BuildPath path) {
  switch (path) {
    case BuildPath::series:
      return bernoulli_level_series(n_max).inverted().coeffs();
    case BuildPath::recurrence: {
      std::vector<QRat> numbers;
      numbers.reserve(static_cast<std::size_t>(n_max) + 1);
      numbers.emplace_back(1);
      for (int m = 1; m <= n_max; ++m) {
        QRat sum;
        for (int l = 0; l < m; ++l) {
          sum += QRat(q_binomial(m + 1, l)) * numbers[static_cast<std::size_t>(l)];
        }
        numbers.push_back(-sum / QRat(q_int(m + 1)));
      }
      return numbers;
    }
    case BuildPath::multinomial:
      break;
  }
  throw OutOfRange("unsupported build path for bernoulli numbers");
}

std::vector<XPoly> appell_members_from_numbers(
    const std::vector<QRat>& numbers) {
  std::vector<XPoly> members;
  members.reserve(numbers.size());
  for (std::size_t n = 0; n < numbers.size(); ++n) {
    std::vector<QRat> coeffs(n + 1, QRat());
    for (std::size_t l = 0; l <= n; ++l) {
      coeffs[l] = QRat(q_binomial(static_cast<int>(n), static_cast<int>(l))) *
                  numbers[n - l];
    }
    members.emplace_back(std::move(coeffs));
  }
  return members;
}

PolyFamily euler_polys(int n_max) {
  std::vector<QRat> numbers = euler_numbers_series(n_max);
  std::vector<XPoly> members = appell_members_from_numbers(numbers);
  return PolyFamily{FamilyKind::euler, 1, BuildPath::series,
                    std::move(members), std::move(numbers)};
}

PolyFamily bernoulli_polys(int n_max) {
  std::vector<QRat> numbers = bernoulli_numbers(n_max, BuildPath::series);
  std::vector<XPoly> members = appell_members_from_numbers(numbers);
  return PolyFamily{FamilyKind::bernoulli, 1, BuildPath::series,
                    std::move(members), std::move(numbers)};
}

namespace {

// E^(r)_n (or B^(r)_n) as the r-fold q-binomial convolution of the order-one
// numbers: sum over weak compositions (i_1..i_r) of n of (n; i)_q prod numbers[i_j].
std::vector<QRat> convolution_power_numbers(const std::vector<QRat>& base,
                                            int n_max, int r) {
  std::vector<QRat> numbers;
  numbers.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    QRat sum;
    CompositionEnumerator gen(n, r);
    Composition c;
    while (gen.next(c)) {
      QRat term = QRat(q_multinomial(n, c));
      for (int part : c.parts) {
        term *= base[static_cast<std::size_t>(part)];
      }
      sum += term;
    }
    numbers.push_back(std::move(sum));
  }
  return numbers;
}

}  // namespace

PolyFamily euler_r(int n_max, int r, BuildPath path) {
  if (r < 0) throw OutOfRange("family order must be >= 0");
  std::vector<QRat> numbers;
  switch (path) {
    case BuildPath::series:
      numbers = euler_level_series(n_max).inverted().power(r).coeffs();
      break;
    case BuildPath::multinomial:
      numbers = convolution_power_numbers(euler_numbers_series(n_max), n_max, r);
      break;
    case BuildPath::recurrence:
      throw OutOfRange("unsupported build path for order-r euler family");
  }
  std::vector<XPoly> members = appell_members_from_numbers(numbers);
  return PolyFamily{FamilyKind::euler, r, path, std::move(members),
                    std::move(numbers)};
}

PolyFamily bernoulli_r(int n_max, int r, BuildPath path) {
  if (r < 0) throw OutOfRange("family order must be >= 0");
  std::vector<QRat> numbers;
  switch (path) {
    case BuildPath::series:
      numbers =
          bernoulli_level_series(n_max).inverted().power(r).coeffs();
      break;
    case BuildPath::multinomial:
      numbers = convolution_power_numbers(
          bernoulli_numbers(n_max, BuildPath::series), n_max, r);
      break;
    case BuildPath::recurrence:
      throw OutOfRange("unsupported build path for order-r bernoulli family");
  }
  std::vector<XPoly> members = appell_members_from_numbers(numbers);
  return PolyFamily{FamilyKind::bernoulli, r, path, std::move(members),
                    std::move(numbers)};
}

}  // namespace qumbral

#include "qumbral/qcomb.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "qumbral/errors.hpp"

namespace qumbral {

int Composition::sum() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

QNumPoly q_int(int n) {
  if (n < 0) throw OutOfRange("q_int of negative n");
  std::vector<BigRat> ones(static_cast<std::size_t>(n), BigRat(1));
  return QNumPoly(std::move(ones));
}

QNumPoly q_factorial(int n) {
  if (n < 0) throw OutOfRange("q_factorial of negative n");
  static std::mutex lock;
  static std::vector<QNumPoly> cache{QNumPoly(1)};  // [0]_q! = 1
  std::scoped_lock guard(lock);
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    cache.push_back(cache.back() * q_int(m));
  }
  return cache[static_cast<std::size_t>(n)];
}

QNumPoly q_binomial(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return QNumPoly(1);
  if (k > n - k) k = n - k;
  static std::mutex lock;
  static std::map<std::pair<int, int>, QNumPoly> cache;
  {
    std::scoped_lock guard(lock);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  QNumPoly value = QNumPoly::exact_div(
      q_factorial(n), q_factorial(k) * q_factorial(n - k));
  std::scoped_lock guard(lock);
  return cache.emplace(std::make_pair(n, k), std::move(value))
      .first->second;
}

QNumPoly q_multinomial(int n, const Composition& parts) {
  if (n < 0) throw OutOfRange("q_multinomial of negative n");
  for (int p : parts.parts) {
    if (p < 0) throw OutOfRange("negative composition part");
  }
  if (parts.sum() != n) {
    throw SumMismatch("composition parts do not sum to the multinomial total");
  }
  std::vector<int> sorted(parts.parts);
  std::sort(sorted.begin(), sorted.end());
  while (!sorted.empty() && sorted.front() == 0) sorted.erase(sorted.begin());

  static std::mutex lock;
  static std::map<std::pair<int, std::vector<int>>, QNumPoly> cache;
  {
    std::scoped_lock guard(lock);
    auto it = cache.find({n, sorted});
    if (it != cache.end()) return it->second;
  }
  QNumPoly denom(1);
  for (int p : sorted) denom = denom * q_factorial(p);
  QNumPoly value = QNumPoly::exact_div(q_factorial(n), denom);
  std::scoped_lock guard(lock);
  return cache.emplace(std::make_pair(n, std::move(sorted)), std::move(value))
      .first->second;
}

QRat q_shifted_factorial(const QRat& a, int n) {
  if (n < 0) throw OutOfRange("q_shifted_factorial of negative n");
  QRat product(1);
  for (int i = 0; i < n; ++i) {
    product *= QRat(1) - a * QRat(QNumPoly::monomial(i));
  }
  return product;
}

CompositionEnumerator::CompositionEnumerator(int total, int length)
    : total_(total), length_(length), done_(false), started_(false) {
  if (total < 0 || length < 0) {
    throw OutOfRange("composition bounds must be non-negative");
  }
  if (length == 0) {
    done_ = total != 0;  // exactly the empty composition of 0
  } else {
    parts_.assign(static_cast<std::size_t>(length), 0);
    parts_.back() = total;
  }
}

bool CompositionEnumerator::next(Composition& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    out.parts = parts_;
    return true;
  }
  if (length_ == 0) {
    done_ = true;
    return false;
  }
  // Odometer over the first length-1 entries; the last entry absorbs the
  // remainder, keeping the total fixed.  Entering iteration j, slack holds
  // the sum of all entries to the right of j.
  int slack = parts_[static_cast<std::size_t>(length_) - 1];
  for (int j = length_ - 2; j >= 0; --j) {
    if (slack > 0) {
      ++parts_[static_cast<std::size_t>(j)];
      for (int i = j + 1; i < length_ - 1; ++i) {
        parts_[static_cast<std::size_t>(i)] = 0;
      }
      parts_[static_cast<std::size_t>(length_) - 1] = slack - 1;
      out.parts = parts_;
      return true;
    }
    slack += parts_[static_cast<std::size_t>(j)];
  }
  done_ = true;
  return false;
}

std::vector<Composition> compositions(int total, int length) {
  std::vector<Composition> all;
  CompositionEnumerator gen(total, length);
  Composition c;
  while (gen.next(c)) all.push_back(c);
  return all;
}

}  // namespace qumbral

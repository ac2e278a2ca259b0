#include "qumbral/bigrat.hpp"

#include <cctype>
#include <cstddef>

#include "qumbral/errors.hpp"

namespace qumbral {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

BigRat bigrat_from_string(const std::string& text) {
  const std::size_t slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  std::size_t digits_from = 0;
  if (!num_part.empty() && (num_part[0] == '-' || num_part[0] == '+')) {
    digits_from = 1;
  }
  if (!all_digits(num_part, digits_from, num_part.size())) {
    throw ParseError(0, "integer");
  }
  BigInt num(num_part);
  if (slash == std::string::npos) return BigRat(num);

  const std::string den_part = text.substr(slash + 1);
  if (!all_digits(den_part, 0, den_part.size())) {
    throw ParseError(slash + 1, "positive integer denominator");
  }
  BigInt den(den_part);
  if (den == 0) throw ParseError(slash + 1, "nonzero denominator");
  BigRat value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const BigRat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace qumbral

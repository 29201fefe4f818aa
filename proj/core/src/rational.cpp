#include "swh/rational.hpp"

#include <utility>
#include <vector>

#include "swh/error.hpp"

namespace swh {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw PreconditionError("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

namespace {

std::pair<mpz_class, mpz_class> split_sum(std::span<const mpz_class> nums,
                                          std::span<const mpz_class> dens) {
  if (nums.size() == 1) return {nums[0], dens[0]};
  const std::size_t mid = nums.size() / 2;
  auto [p1, q1] = split_sum(nums.first(mid), dens.first(mid));
  auto [p2, q2] = split_sum(nums.subspan(mid), dens.subspan(mid));
  return {p1 * q2 + p2 * q1, q1 * q2};
}

}  // namespace

Rational sum_fractions(std::span<const mpz_class> numerators,
                       std::span<const mpz_class> denominators) {
  if (numerators.size() != denominators.size()) {
    throw PreconditionError("sum_fractions: size mismatch");
  }
  if (numerators.empty()) return Rational(0);
  auto [p, q] = split_sum(numerators, denominators);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational harmonic_range(int first, int last) {
  if (first < 1) throw PreconditionError("harmonic_range: first must be >= 1");
  if (last < first) return Rational(0);
  std::vector<mpz_class> nums(static_cast<std::size_t>(last - first + 1), mpz_class(1));
  std::vector<mpz_class> dens;
  dens.reserve(nums.size());
  for (int m = first; m <= last; ++m) dens.emplace_back(m);
  return sum_fractions(nums, dens);
}

}  // namespace swh

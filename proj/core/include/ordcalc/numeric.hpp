#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ordcalc/errors.hpp"

namespace ordcalc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// All positive divisors of n >= 1, sorted ascending.
std::vector<std::int64_t> sorted_divisors(std::int64_t n);

/// Largest divisor of `value` coprime to `carrier` (carrier >= 1).
std::int64_t coprime_part(std::int64_t value, std::int64_t carrier);

/// Smallest prime factor of n >= 2.
std::int64_t smallest_prime_factor(std::int64_t n);

/// True iff every prime factor of v is <= bound. v must be >= 1;
/// v == 1 holds vacuously.
bool prime_factors_at_most(BigInt v, std::int64_t bound);

/// Exact binomial coefficient C(n, k) for k >= 0 (0 when 0 <= n < k).
BigInt binomial(const BigInt& n, int k);

/// base^exp for exp >= 0.
BigInt pow_big(const BigInt& base, std::int64_t exp);

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return a / std::gcd(a, b) * b;
}

/// An exact rational in lowest terms with positive denominator.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& x, const Ratio& y) {
    return x.num * y.den <=> y.num * x.den;  // magnitudes here stay tiny
  }
};

Ratio make_ratio(std::int64_t num, std::int64_t den);
std::string to_string(const Ratio& r);  // "num/den"

}  // namespace ordcalc

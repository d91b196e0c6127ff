#include "ordcalc/numeric.hpp"

#include <algorithm>

namespace ordcalc {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw DomainError("factorize: argument must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> sorted_divisors(std::int64_t n) {
  std::vector<std::int64_t> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    std::int64_t pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::int64_t coprime_part(std::int64_t value, std::int64_t carrier) {
  if (value < 1 || carrier < 1) throw DomainError("coprime_part: arguments must be positive");
  std::int64_t g;
  while ((g = std::gcd(value, carrier)) > 1) value /= g;
  return value;
}

std::int64_t smallest_prime_factor(std::int64_t n) {
  if (n < 2) throw DomainError("smallest_prime_factor: argument must be >= 2");
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

bool prime_factors_at_most(BigInt v, std::int64_t bound) {
  if (v < 1) throw DomainError("prime_factors_at_most: argument must be positive");
  for (std::int64_t p = 2; p <= bound; ++p)
    while (v % p == 0) v /= p;
  return v == 1;
}

BigInt binomial(const BigInt& n, int k) {
  if (k < 0) throw DomainError("binomial: k must be nonnegative");
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  // den always divides the falling factorial of any integer n
  return num / den;
}

BigInt pow_big(const BigInt& base, std::int64_t exp) {
  if (exp < 0) throw DomainError("pow_big: exponent must be nonnegative");
  BigInt acc = 1, b = base;
  while (exp) {
    if (exp & 1) acc *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return acc;
}

Ratio make_ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("make_ratio: zero denominator");
  if (den < 0) { num = -num; den = -den; }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) { num /= g; den /= g; }
  return Ratio{num, den};
}

std::string to_string(const Ratio& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace ordcalc

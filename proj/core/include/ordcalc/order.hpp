#pragma once

#include <cstdint>

#include "ordcalc/element.hpp"
#include "ordcalc/numeric.hpp"

namespace ordcalc {

/// Data describing <a> n <b> for a pair of elements of orders m and n:
/// the intersection has order e, is generated by g, and
/// a^(m/e) = g^u, b^(n/e) = g^v with u, v in [1, e] coprime to e.
struct IntersectionData {
  std::int64_t e = 1;
  GroupElement g;
  std::int64_t u = 1;
  std::int64_t v = 1;
  std::int64_t m = 1;
  std::int64_t n = 1;
};

/// All order data for one ordered pair.
struct PairOrderReport {
  std::int64_t m = 1;             // order of a
  std::int64_t n = 1;             // order of b
  std::int64_t e = 1;             // |<a> n <b>|
  std::int64_t D = 1;             // largest divisor of e coprime to m' and n'
  int epsilon = 1;                // 2 when D is even, else 1
  std::int64_t mutual = 1;        // o(a,b)
  std::int64_t product_order = 1; // o(ab)
  Ratio ratio;                    // o(ab)/o(a,b), lowest terms
  std::int64_t r_commutator = 1;  // o([b,a])
  std::int64_t m_prime = 1;       // m / gcd(m,n)
  std::int64_t n_prime = 1;       // n / gcd(m,n)
};

/// Least N >= 1 with a^N b^N = 1. The solution set is a subgroup of Z
/// containing lcm(o(a), o(b)), so only divisors of the lcm are tested.
std::int64_t mutual_order(const GroupElement& a, const GroupElement& b);

/// o(a^k, b^k) computed as o(a,b)/gcd(o(a,b),k) and cross-checked against
/// the direct computation; disagreement raises InternalInconsistency.
std::int64_t mutual_order_of_powers(const GroupElement& a, const GroupElement& b,
                                    std::int64_t k);

/// Enumerates both cyclic subgroups and resolves the intersection data with
/// the normalization g = a^(m/e), u = 1; v is found by enumeration.
IntersectionData cyclic_intersection(const GroupElement& a, const GroupElement& b);

/// Fills a full PairOrderReport and asserts the divisibility sandwich
/// lcm(m,n)/D | o(a,b) | lcm(m,n)/epsilon. A sandwich failure raises
/// TheoremViolation (it can only be caused by a bug).
PairOrderReport jungnickel_data(const GroupElement& a, const GroupElement& b);

/// lcm(m,n) / gcd(e, v*m' + u*n'). Verifies invariance under rescaling
/// (u, v) by every unit mod e, and agreement with mutual_order of the pair
/// the data was derived from is asserted by callers/tests.
std::int64_t mutual_order_closed_form(const IntersectionData& data);

/// The deviation element d_k with (ab)^k = a^k b^k d_k(a,b), evaluated via
/// d_k(a,b) = ([b^(k-1), a^(k-1)] * d_(k-1)(b,a))^b, d_1 = 1.
GroupElement deviation(const GroupElement& a, const GroupElement& b, std::int64_t k);

/// Least k >= 1 such that a^k commutes with b, computed as
/// o(a^-1, b^-1 a b).
std::int64_t commutator_exponent(const GroupElement& a, const GroupElement& b);

}  // namespace ordcalc

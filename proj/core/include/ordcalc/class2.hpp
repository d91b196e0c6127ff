#pragma once

#include <cstdint>

#include "ordcalc/group.hpp"
#include "ordcalc/numeric.hpp"

namespace ordcalc {

enum class Class2Case {
  ROdd,            // r odd: ratio 1
  REvenQOdd,       // r even, o(a,b)/r odd: ratio 2
  REvenQEvenHalf,  // r even, q even, witness holds and o(a,b)/(2r) odd: ratio 1/2
  REvenQEvenOne,   // r even, q even, otherwise: ratio 1
};

const char* to_string(Class2Case c);

/// Outcome of the exact class-2 classification of one ordered pair.
struct Class2Verdict {
  std::int64_t r = 1;        // order of c = [b,a]
  std::int64_t q = 1;        // o(a,b) / r (always an integer)
  Class2Case case_tag = Class2Case::ROdd;
  Ratio predicted_ratio;     // in {1/2, 1, 2}
  bool witness_equality = false;   // a^(o(a,b)/2) b^(o(a,b)/2) == c^(r/2)
  bool half_quotient_odd = false;  // o(a,b)/(2r) odd
  std::int64_t mutual = 1;         // o(a,b)
  std::int64_t product_order = 1;  // o(ab)
};

/// Verifies (ab)^n = a^n b^n [b,a]^C(n,2) for 1 <= n <= n_max and
/// [a^i, b^j] = [a,b]^(ij) for |i|,|j| <= n_max by direct group arithmetic.
/// Requires the ambient group to have class <= 2.
bool class2_identities_check(const FiniteGroup& G, const GroupElement& a,
                             const GroupElement& b, int n_max);

/// o([a,b]) in a class <= 2 group, cross-checked against both centralizer
/// quotient formulas and the least-commuting-power characterisation; any
/// disagreement raises TheoremViolation.
std::int64_t commutator_order_class2(const FiniteGroup& G, const GroupElement& a,
                                     const GroupElement& b);

/// Full case analysis of o(ab)/o(a,b) for a pair in a class <= 2 group.
/// Asserts the exact product formula
///   o(ab) = o(a,b) * o(a^r b^r c^C(r,2)) / o(a^r b^r)
/// and that the case prediction matches the actual ratio.
Class2Verdict classify_pair(const FiniteGroup& G, const GroupElement& a,
                            const GroupElement& b);

}  // namespace ordcalc

#include "ordcalc/class2.hpp"

#include "ordcalc/order.hpp"

namespace ordcalc {

namespace {

void require_class_at_most_2(const FiniteGroup& G, const char* op) {
  const auto c = G.nilpotency_class();
  if (!c || *c > 2)
    throw DomainError(std::string(op) + ": ambient group must have nilpotency class <= 2");
}

std::int64_t count_in_cyclic_and_centralizing(const GroupElement& a,
                                              const GroupElement& other) {
  // |<a> n C_G(other)| scanned over the powers of a
  std::int64_t count = 0;
  GroupElement x = identity_like(a);
  const std::int64_t m = element_order(a);
  for (std::int64_t i = 0; i < m; ++i) {
    if (commutes(x, other)) ++count;
    x = multiply(x, a);
  }
  return count;
}

}  // namespace

const char* to_string(Class2Case c) {
  switch (c) {
    case Class2Case::ROdd: return "R_ODD";
    case Class2Case::REvenQOdd: return "R_EVEN_Q_ODD";
    case Class2Case::REvenQEvenHalf: return "R_EVEN_Q_EVEN_HALF";
    case Class2Case::REvenQEvenOne: return "R_EVEN_Q_EVEN_ONE";
  }
  return "?";
}

bool class2_identities_check(const FiniteGroup& G, const GroupElement& a,
                             const GroupElement& b, int n_max) {
  require_class_at_most_2(G, "class2_identities_check");
  const GroupElement c_ba = commutator(b, a);
  const GroupElement c_ab = commutator(a, b);
  for (int n = 1; n <= n_max; ++n) {
    const GroupElement lhs = power(multiply(a, b), n);
    const GroupElement rhs = multiply(multiply(power(a, n), power(b, n)),
                                      power(c_ba, n * static_cast<std::int64_t>(n - 1) / 2));
    if (lhs != rhs) return false;
  }
  for (int i = -n_max; i <= n_max; ++i)
    for (int j = -n_max; j <= n_max; ++j) {
      const GroupElement lhs = commutator(power(a, i), power(b, j));
      const GroupElement rhs = power(c_ab, static_cast<std::int64_t>(i) * j);
      if (lhs != rhs) return false;
    }
  return true;
}

std::int64_t commutator_order_class2(const FiniteGroup& G, const GroupElement& a,
                                     const GroupElement& b) {
  require_class_at_most_2(G, "commutator_order_class2");
  if (!G.contains(a) || !G.contains(b))
    throw MembershipError("commutator_order_class2: elements must lie in the group");

  const std::int64_t r = element_order(commutator(a, b));
  const std::int64_t m = element_order(a);
  const std::int64_t n = element_order(b);

  const std::int64_t via_a = m / count_in_cyclic_and_centralizing(a, b);
  const std::int64_t via_b = n / count_in_cyclic_and_centralizing(b, a);
  const std::int64_t exp_ab = commutator_exponent(a, b);
  const std::int64_t exp_ba = commutator_exponent(b, a);
  if (via_a != r || via_b != r || exp_ab != r || exp_ba != r)
    throw TheoremViolation("commutator_order_class2: the four routes disagree: o(c)=" +
                           std::to_string(r) + " m/|<a> n C(b)|=" + std::to_string(via_a) +
                           " n/|<b> n C(a)|=" + std::to_string(via_b) +
                           " exp(a,b)=" + std::to_string(exp_ab) +
                           " exp(b,a)=" + std::to_string(exp_ba));

  const std::int64_t f = cyclic_intersection(a, b).e;
  if ((std::gcd(m, n) / f) % r != 0)
    throw TheoremViolation("commutator_order_class2: o(c) does not divide gcd(m,n)/f");
  return r;
}

Class2Verdict classify_pair(const FiniteGroup& G, const GroupElement& a,
                            const GroupElement& b) {
  require_class_at_most_2(G, "classify_pair");
  const GroupElement c = commutator(b, a);

  Class2Verdict v;
  v.r = element_order(c);
  v.mutual = mutual_order(a, b);
  v.product_order = element_order(multiply(a, b));

  if (v.mutual % v.r != 0 || v.product_order % v.r != 0)
    throw TheoremViolation("classify_pair: r does not divide both orders: r=" +
                           std::to_string(v.r) + " o(a,b)=" + std::to_string(v.mutual) +
                           " o(ab)=" + std::to_string(v.product_order));
  v.q = v.mutual / v.r;

  if (v.r % 2 == 1) {
    v.case_tag = Class2Case::ROdd;
    v.predicted_ratio = make_ratio(1, 1);
  } else if (v.q % 2 == 1) {
    v.case_tag = Class2Case::REvenQOdd;
    v.predicted_ratio = make_ratio(2, 1);
  } else {
    const GroupElement half =
        multiply(power(a, v.mutual / 2), power(b, v.mutual / 2));
    v.witness_equality = (half == power(c, v.r / 2));
    v.half_quotient_odd = ((v.mutual / (2 * v.r)) % 2 == 1);
    if (v.witness_equality && v.half_quotient_odd) {
      v.case_tag = Class2Case::REvenQEvenHalf;
      v.predicted_ratio = make_ratio(1, 2);
    } else {
      v.case_tag = Class2Case::REvenQEvenOne;
      v.predicted_ratio = make_ratio(1, 1);
    }
  }

  if (make_ratio(v.product_order, v.mutual) != v.predicted_ratio)
    throw TheoremViolation("classify_pair: predicted ratio " + to_string(v.predicted_ratio) +
                           " but o(ab)/o(a,b) = " + std::to_string(v.product_order) + "/" +
                           std::to_string(v.mutual) + " (case " + to_string(v.case_tag) + ")");

  // the exact product formula, checked by cross-multiplication:
  // o(ab) * o(a^r b^r) = o(a,b) * o(a^r b^r c^C(r,2))
  const GroupElement x = multiply(power(a, v.r), power(b, v.r));
  const GroupElement y = power(c, binomial(BigInt(v.r), 2));
  const std::int64_t ox = element_order(x);
  const std::int64_t oxy = element_order(multiply(x, y));
  if (v.product_order * ox != v.mutual * oxy)
    throw TheoremViolation("classify_pair: the product formula fails: o(ab)=" +
                           std::to_string(v.product_order) + " o(a,b)=" +
                           std::to_string(v.mutual) + " o(x)=" + std::to_string(ox) +
                           " o(xy)=" + std::to_string(oxy));
  return v;
}

}  // namespace ordcalc

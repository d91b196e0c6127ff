#include "ordcalc/order.hpp"

#include <unordered_map>
#include <vector>

namespace ordcalc {

std::int64_t mutual_order(const GroupElement& a, const GroupElement& b) {
  if (!a.same_shape(b))
    throw RepresentationMismatch("mutual_order: incompatible representations");
  const std::int64_t m = element_order(a);
  const std::int64_t n = element_order(b);
  for (std::int64_t N : sorted_divisors(lcm64(m, n)))
    if (multiply(power(a, N), power(b, N)).is_identity()) return N;
  throw InternalInconsistency("mutual_order: lcm(m,n) failed to annihilate the pair");
}

std::int64_t mutual_order_of_powers(const GroupElement& a, const GroupElement& b,
                                    std::int64_t k) {
  const std::int64_t ab = mutual_order(a, b);
  const std::int64_t expected = ab / std::gcd(ab, k < 0 ? -k : k);
  const std::int64_t direct = mutual_order(power(a, k), power(b, k));
  if (direct != expected)
    throw InternalInconsistency("mutual_order_of_powers: reduction law failed: o(a,b)=" +
                                std::to_string(ab) + " k=" + std::to_string(k) +
                                " direct=" + std::to_string(direct));
  return expected;
}

IntersectionData cyclic_intersection(const GroupElement& a, const GroupElement& b) {
  if (!a.same_shape(b))
    throw RepresentationMismatch("cyclic_intersection: incompatible representations");
  const std::int64_t m = element_order(a);
  const std::int64_t n = element_order(b);

  std::unordered_map<GroupElement, std::int64_t, ElementHash> in_a;  // power -> exponent
  GroupElement x = identity_like(a);
  for (std::int64_t i = 0; i < m; ++i) {
    x = multiply(x, a);
    in_a.emplace(x, i + 1);  // keeps the smallest exponent per element
  }
  std::int64_t e = 0;
  GroupElement y = identity_like(b);
  for (std::int64_t j = 0; j < n; ++j) {
    y = multiply(y, b);
    if (in_a.count(y)) ++e;
  }

  IntersectionData data;
  data.m = m;
  data.n = n;
  data.e = e;
  data.g = power(a, m / e);
  data.u = 1;
  if (element_order(data.g) != e)
    throw TheoremViolation("cyclic_intersection: a^(m/e) does not generate the intersection");
  const GroupElement target = power(b, n / e);
  GroupElement p = identity_like(a);
  for (std::int64_t v = 1; v <= e; ++v) {
    p = multiply(p, data.g);
    if (p == target) {
      data.v = v;
      if (std::gcd(v, e) != 1)
        throw TheoremViolation("cyclic_intersection: b^(n/e) is not a generator");
      return data;
    }
  }
  throw TheoremViolation("cyclic_intersection: b^(n/e) not found in <a^(m/e)>");
}

PairOrderReport jungnickel_data(const GroupElement& a, const GroupElement& b) {
  const IntersectionData data = cyclic_intersection(a, b);
  PairOrderReport rep;
  rep.m = data.m;
  rep.n = data.n;
  rep.e = data.e;
  const std::int64_t g = std::gcd(rep.m, rep.n);
  rep.m_prime = rep.m / g;
  rep.n_prime = rep.n / g;
  rep.D = coprime_part(rep.e, rep.m_prime * rep.n_prime);
  rep.epsilon = (rep.D % 2 == 0) ? 2 : 1;
  rep.mutual = mutual_order(a, b);
  rep.product_order = element_order(multiply(a, b));
  rep.ratio = make_ratio(rep.product_order, rep.mutual);
  rep.r_commutator = element_order(commutator(b, a));

  const std::int64_t l = lcm64(rep.m, rep.n);
  if (rep.mutual % (l / rep.D) != 0 || (l / rep.epsilon) % rep.mutual != 0)
    throw TheoremViolation("jungnickel_data: divisibility sandwich failed with m=" +
                           std::to_string(rep.m) + " n=" + std::to_string(rep.n) +
                           " e=" + std::to_string(rep.e) + " D=" + std::to_string(rep.D) +
                           " o(a,b)=" + std::to_string(rep.mutual));
  return rep;
}

std::int64_t mutual_order_closed_form(const IntersectionData& data) {
  const std::int64_t g = std::gcd(data.m, data.n);
  const std::int64_t mp = data.m / g;
  const std::int64_t np = data.n / g;
  const std::int64_t l = lcm64(data.m, data.n);
  const std::int64_t value = l / std::gcd(data.e, data.v * mp + data.u * np);
  // rescaling (u, v) by any unit mod e must not change the value
  for (std::int64_t k = 1; k < data.e; ++k) {
    if (std::gcd(k, data.e) != 1) continue;
    const std::int64_t uk = (data.u * k) % data.e;
    const std::int64_t vk = (data.v * k) % data.e;
    if (l / std::gcd(data.e, vk * mp + uk * np) != value)
      throw TheoremViolation("mutual_order_closed_form: unit rescaling changed the value");
  }
  return value;
}

GroupElement deviation(const GroupElement& a, const GroupElement& b, std::int64_t k) {
  if (k < 1) throw DomainError("deviation: k must be >= 1");
  // two interleaved sequences: d_j(a,b) and d_j(b,a)
  GroupElement dab = identity_like(a);
  GroupElement dba = identity_like(a);
  GroupElement apow = a;  // a^j
  GroupElement bpow = b;  // b^j
  for (std::int64_t j = 2; j <= k; ++j) {
    const GroupElement next_ab = conjugate(multiply(commutator(bpow, apow), dba), b);
    const GroupElement next_ba = conjugate(multiply(commutator(apow, bpow), dab), a);
    dab = next_ab;
    dba = next_ba;
    apow = multiply(apow, a);
    bpow = multiply(bpow, b);
  }
  return dab;
}

std::int64_t commutator_exponent(const GroupElement& a, const GroupElement& b) {
  return mutual_order(inverse(a), multiply(inverse(b), multiply(a, b)));
}

}  // namespace ordcalc

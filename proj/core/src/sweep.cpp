#include "ordcalc/sweep.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "ordcalc/hall.hpp"
#include "ordcalc/io.hpp"
#include "ordcalc/order.hpp"

namespace ordcalc {

namespace {

// ---------------------------------------------------------------------------
// Per-group tables shared read-only by all sweep workers. Built once,
// single-threaded, before the pair phase starts.
// ---------------------------------------------------------------------------

struct CyclicSub {
  std::int64_t size = 1;
  std::vector<std::uint32_t> members;                      // sorted ids
  std::vector<std::pair<std::uint32_t, std::int64_t>> dlog;  // id -> exponent, sorted by id
};

struct RepPair {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint64_t weight = 0;  // orbit size
};

struct PairTables {
  const FiniteGroup* G = nullptr;
  std::vector<std::int64_t> divisors;       // sorted divisors of exponent(G)
  std::vector<int> div_index_of;            // divisor value -> index (dense, small)
  std::vector<std::uint32_t> pow_ids;       // [div_idx * |G| + id] = id of x^N
  std::vector<std::uint32_t> sub_of;        // id -> cyclic subgroup index
  std::vector<CyclicSub> subs;
  std::vector<std::int32_t> sub_meet;       // K*K intersection sizes
  std::vector<RepPair> reps;                // orbit representatives, fixed order
  std::uint64_t total_pairs = 0;

  int gamma = 0;                     // max(nilpotency class, 1); 0 if not nilpotent
  std::int64_t smallest_prime = 0;   // of |G| (0 for the trivial group)
  bool big_constants_fit = true;     // B, C fit in int64
  std::int64_t B64 = 1, C64 = 1;
  BigInt B = 1, C = 1;

  std::uint32_t pow_id(std::uint32_t id, std::int64_t n) const {
    return pow_ids[static_cast<std::size_t>(div_index_of[static_cast<std::size_t>(n)]) *
                       G->order() +
                   id];
  }
  std::int64_t dlog(const CyclicSub& sub, std::uint32_t id) const {
    auto it = std::lower_bound(sub.dlog.begin(), sub.dlog.end(), id,
                               [](const auto& p, std::uint32_t v) { return p.first < v; });
    if (it == sub.dlog.end() || it->first != id)
      throw InternalInconsistency("dlog: element not in the cyclic subgroup");
    return it->second;
  }
};

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw InternalInconsistency("mod_inverse: arguments not coprime");
  return ((t % m) + m) % m;
}

bool prime_factors_at_most_64(std::int64_t v, std::int64_t bound) {
  for (std::int64_t p = 2; p <= bound; ++p)
    while (v % p == 0) v /= p;
  return v == 1;
}

// Conjugacy classes of elements, via the generator conjugation tables.
// Returns the class representative (smallest id) per element.
std::vector<std::uint32_t> element_class_reps(
    const FiniteGroup& G, const std::vector<std::vector<std::uint32_t>>& conj_tab) {
  const std::uint32_t n = static_cast<std::uint32_t>(G.order());
  std::vector<std::uint32_t> rep_of(n, n);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (rep_of[start] != n) continue;
    rep_of[start] = start;
    stack.assign(1, start);
    while (!stack.empty()) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      for (const auto& tab : conj_tab) {
        const std::uint32_t y = tab[x];
        if (rep_of[y] == n) {
          rep_of[y] = start;
          stack.push_back(y);
        }
      }
    }
  }
  return rep_of;
}

// A small generating set for the subgroup whose sorted member ids are given.
std::vector<std::uint32_t> small_generating_set(const FiniteGroup& G,
                                                const std::vector<std::uint32_t>& members) {
  std::vector<std::uint32_t> gens;
  std::vector<bool> in_closure(G.order(), false);
  std::vector<std::uint32_t> closure{0};  // identity has id 0
  in_closure[0] = true;
  for (std::uint32_t candidate : members) {
    if (in_closure[candidate]) continue;
    gens.push_back(candidate);
    // extend the closure with the new generator
    std::vector<std::uint32_t> frontier = closure;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const GroupElement& x = G.element(frontier[head]);
      for (std::uint32_t g : gens) {
        const std::uint32_t z = G.id_of(multiply(x, G.element(g)));
        if (!in_closure[z]) {
          in_closure[z] = true;
          closure.push_back(z);
          frontier.push_back(z);
        }
      }
    }
    if (closure.size() == members.size()) break;
  }
  return gens;
}

PairTables build_tables(const FiniteGroup& G) {
  PairTables t;
  t.G = &G;
  const std::uint32_t n = static_cast<std::uint32_t>(G.order());

  t.divisors = sorted_divisors(G.exponent());
  t.div_index_of.assign(static_cast<std::size_t>(G.exponent()) + 1, -1);
  for (std::size_t i = 0; i < t.divisors.size(); ++i)
    t.div_index_of[static_cast<std::size_t>(t.divisors[i])] = static_cast<int>(i);
  t.pow_ids.resize(t.divisors.size() * n);
  for (std::size_t di = 0; di < t.divisors.size(); ++di)
    for (std::uint32_t id = 0; id < n; ++id)
      t.pow_ids[di * n + id] = G.id_of(power(G.element(id), t.divisors[di]));

  // cyclic subgroups, deduplicated by member list
  t.sub_of.assign(n, 0);
  std::map<std::vector<std::uint32_t>, std::uint32_t> seen;
  for (std::uint32_t id = 0; id < n; ++id) {
    std::vector<std::uint32_t> members;
    GroupElement x = G.element(id);
    std::uint32_t xid = id;
    while (true) {
      members.push_back(xid);
      if (xid == 0) break;
      x = multiply(x, G.element(id));
      xid = G.id_of(x);
    }
    std::sort(members.begin(), members.end());
    auto [it, fresh] = seen.emplace(std::move(members), static_cast<std::uint32_t>(t.subs.size()));
    if (fresh) {
      CyclicSub sub;
      sub.members = it->first;
      sub.size = static_cast<std::int64_t>(sub.members.size());
      // discrete logs relative to this (first-seen) generator
      GroupElement p = G.identity();
      std::uint32_t pid = 0;
      sub.dlog.emplace_back(pid, 0);
      for (std::int64_t e = 1; e < sub.size; ++e) {
        p = multiply(p, G.element(id));
        pid = G.id_of(p);
        sub.dlog.emplace_back(pid, e);
      }
      std::sort(sub.dlog.begin(), sub.dlog.end());
      t.subs.push_back(std::move(sub));
    }
    t.sub_of[id] = it->second;
  }
  const std::size_t K = t.subs.size();
  t.sub_meet.assign(K * K, 0);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i; j < K; ++j) {
      const auto& A = t.subs[i].members;
      const auto& B = t.subs[j].members;
      std::int32_t count = 0;
      std::size_t x = 0, y = 0;
      while (x < A.size() && y < B.size()) {
        if (A[x] < B[y]) ++x;
        else if (A[x] > B[y]) ++y;
        else { ++count; ++x; ++y; }
      }
      t.sub_meet[i * K + j] = count;
      t.sub_meet[j * K + i] = count;
    }

  // orbit representatives of the simultaneous conjugation action on pairs:
  // first components run over element class representatives ra; the second
  // components then split into orbits of the conjugation action of C(ra).
  std::vector<std::vector<std::uint32_t>> conj_tab;
  for (const GroupElement& g : G.generators()) {
    std::vector<std::uint32_t> tab(n);
    for (std::uint32_t id = 0; id < n; ++id)
      tab[id] = G.id_of(conjugate(G.element(id), g));
    conj_tab.push_back(std::move(tab));
  }
  const std::vector<std::uint32_t> rep_of = element_class_reps(G, conj_tab);
  std::vector<std::uint64_t> class_size(n, 0);
  for (std::uint32_t id = 0; id < n; ++id) ++class_size[rep_of[id]];

  std::vector<std::uint32_t> stack;
  std::vector<std::uint32_t> visited_epoch(n, 0);
  std::uint32_t epoch = 0;
  for (std::uint32_t ra = 0; ra < n; ++ra) {
    if (rep_of[ra] != ra) continue;
    // centralizer of ra, then a small generating set and its conj tables
    std::vector<std::uint32_t> cent;
    const GroupElement& a_el = G.element(ra);
    for (std::uint32_t id = 0; id < n; ++id)
      if (commutes(G.element(id), a_el)) cent.push_back(id);
    const std::vector<std::uint32_t> cgens = small_generating_set(G, cent);
    std::vector<std::vector<std::uint32_t>> ctab;
    for (std::uint32_t g : cgens) {
      std::vector<std::uint32_t> tab(n);
      for (std::uint32_t id = 0; id < n; ++id)
        tab[id] = G.id_of(conjugate(G.element(id), G.element(g)));
      ctab.push_back(std::move(tab));
    }
    ++epoch;
    for (std::uint32_t b0 = 0; b0 < n; ++b0) {
      if (visited_epoch[b0] == epoch) continue;
      visited_epoch[b0] = epoch;
      std::uint64_t orbit = 1;
      stack.assign(1, b0);
      while (!stack.empty()) {
        const std::uint32_t x = stack.back();
        stack.pop_back();
        for (const auto& tab : ctab) {
          const std::uint32_t y = tab[x];
          if (visited_epoch[y] != epoch) {
            visited_epoch[y] = epoch;
            ++orbit;
            stack.push_back(y);
          }
        }
      }
      t.reps.push_back(RepPair{ra, b0, class_size[ra] * orbit});
      t.total_pairs += class_size[ra] * orbit;
    }
  }
  if (t.total_pairs != static_cast<std::uint64_t>(n) * n)
    throw InternalInconsistency("orbit decomposition does not cover the pair space");

  const auto klass = G.nilpotency_class();
  if (klass) {
    t.gamma = std::max(*klass, 1);
    const hall::ClassConstants cc = hall::class_constants(t.gamma);
    t.B = cc.B;
    t.C = cc.C;
    t.big_constants_fit =
        cc.B <= std::numeric_limits<std::int64_t>::max() &&
        cc.C <= std::numeric_limits<std::int64_t>::max();
    if (t.big_constants_fit) {
      t.B64 = static_cast<std::int64_t>(cc.B);
      t.C64 = static_cast<std::int64_t>(cc.C);
    }
  }
  t.smallest_prime = n > 1 ? smallest_prime_factor(static_cast<std::int64_t>(n)) : 0;
  return t;
}

// ---------------------------------------------------------------------------
// The per-pair checks. All quantities involved are invariant under
// simultaneous conjugation of (a, b), which justifies evaluating them on
// one representative per orbit.
// ---------------------------------------------------------------------------

struct PairCore {
  std::uint32_t a, b;
  std::int64_t m, n, g, l;  // orders, gcd, lcm
  std::int64_t mutual = 0;
  std::int64_t product_order = 0;
};

struct ChunkResult {
  std::map<Ratio, std::uint64_t> census;
  std::vector<Violation> violations;
};

class PairChecker {
public:
  PairChecker(const PairTables& t, const std::vector<Check>& checks)
      : t_(t), G_(*t.G) {
    for (Check c : checks) enabled_[static_cast<std::size_t>(c)] = true;
  }

  void run(const RepPair& rep, ChunkResult& out) const {
    PairCore core;
    core.a = rep.a;
    core.b = rep.b;
    core.m = G_.order_of(rep.a);
    core.n = G_.order_of(rep.b);
    core.g = std::gcd(core.m, core.n);
    core.l = core.m / core.g * core.n;

    const GroupElement& a_el = G_.element(rep.a);
    const GroupElement& b_el = G_.element(rep.b);

    // mutual order and its symmetry, from the divisor ladder of lcm(m,n)
    for (std::int64_t N : t_.divisors) {
      if (core.l % N) continue;
      const GroupElement an = G_.element(t_.pow_id(rep.a, N));
      const GroupElement bn = G_.element(t_.pow_id(rep.b, N));
      const bool fwd = multiply(an, bn).is_identity();
      const bool bwd = multiply(bn, an).is_identity();
      if (fwd != bwd) {
        report(out, rep, Check::Sandwich, "o(a,b) symmetry failed at N=" + std::to_string(N));
        return;
      }
      if (fwd) {
        core.mutual = N;
        break;
      }
    }
    if (core.mutual == 0) {
      report(out, rep, Check::Sandwich, "no divisor of lcm(m,n) annihilates the pair");
      return;
    }
    core.product_order = G_.order_of(G_.id_of(multiply(a_el, b_el)));
    out.census[make_ratio(core.product_order, core.mutual)] += rep.weight;

    if (enabled(Check::Sandwich)) check_sandwich(core, rep, out);
    if (enabled(Check::WeakBound)) check_weakbound(core, rep, out);
    if (enabled(Check::Bounds34)) check_bounds34(core, rep, out);
    if (enabled(Check::Cor38)) check_cor38(core, rep, out);
    if (enabled(Check::Hall36)) check_hall36(core, rep, out);
    if (enabled(Check::Comm37)) check_comm37(core, rep, out);
    if (enabled(Check::Class2)) check_class2(core, rep, out);
  }

private:
  bool enabled(Check c) const { return enabled_[static_cast<std::size_t>(c)]; }

  void report(ChunkResult& out, const RepPair& rep, Check check, std::string msg) const {
    Violation v;
    v.check = check_name(check);
    v.a_id = rep.a;
    v.b_id = rep.b;
    v.a_text = format_element(G_.element(rep.a));
    v.b_text = format_element(G_.element(rep.b));
    v.message = std::move(msg);
    out.violations.push_back(std::move(v));
  }

  void check_sandwich(const PairCore& c, const RepPair& rep, ChunkResult& out) const {
    const std::int64_t e =
        t_.sub_meet[static_cast<std::size_t>(t_.sub_of[c.a]) * t_.subs.size() +
                    t_.sub_of[c.b]];
    const std::int64_t mp = c.m / c.g;
    const std::int64_t np = c.n / c.g;
    if (c.g % e != 0) {
      report(out, rep, Check::Sandwich, "e does not divide gcd(m,n)");
      return;
    }
    const std::int64_t D = coprime_part(e, mp * np);
    const int eps = (D % 2 == 0) ? 2 : 1;
    if (c.mutual % (c.l / D) != 0 || (c.l / eps) % c.mutual != 0) {
      report(out, rep, Check::Sandwich,
             "sandwich failed: m=" + std::to_string(c.m) + " n=" + std::to_string(c.n) +
                 " e=" + std::to_string(e) + " D=" + std::to_string(D) +
                 " eps=" + std::to_string(eps) + " o(a,b)=" + std::to_string(c.mutual));
      return;
    }

    // closed form via the intersection data, normalized to u = 1
    std::int64_t closed = 0;
    if (e == 1) {
      closed = c.l;
    } else {
      const std::uint32_t g_id = t_.pow_id(c.a, c.m / e);
      const CyclicSub& meet = t_.subs[t_.sub_of[g_id]];
      if (meet.size != e) {
        report(out, rep, Check::Sandwich, "a^(m/e) does not generate the intersection");
        return;
      }
      const std::uint32_t h_id = t_.pow_id(c.b, c.n / e);
      const std::int64_t s = t_.dlog(meet, g_id);
      const std::int64_t v0 = t_.dlog(meet, h_id);
      const std::int64_t v = (v0 % e) * mod_inverse(s, e) % e;
      if (std::gcd(v, e) != 1) {
        report(out, rep, Check::Sandwich, "b^(n/e) does not generate the intersection");
        return;
      }
      closed = c.l / std::gcd(e, v * mp + np);
      // the value must not depend on the unit used to rescale (u, v)
      for (std::int64_t k = 2; k < e; ++k) {
        if (std::gcd(k, e) != 1) continue;
        if (c.l / std::gcd(e, (v * k % e) * mp + (k % e) * np) != closed) {
          report(out, rep, Check::Sandwich, "closed form is not unit-invariant");
          return;
        }
      }
    }
    if (closed != c.mutual) {
      report(out, rep, Check::Sandwich,
             "closed form " + std::to_string(closed) + " != o(a,b) " +
                 std::to_string(c.mutual));
      return;
    }

    // coprime / distinct-valuation special cases
    if (c.g == 1 && c.mutual != c.m * c.n) {
      report(out, rep, Check::Sandwich, "coprime orders but o(a,b) != m*n");
      return;
    }
    bool distinct_valuations = true;
    for (const auto& [p, ge] : factorize(c.g)) {
      (void)ge;
      int vm = 0, vn = 0;
      for (std::int64_t x = c.m; x % p == 0; x /= p) ++vm;
      for (std::int64_t x = c.n; x % p == 0; x /= p) ++vn;
      if (vm == vn) {
        distinct_valuations = false;
        break;
      }
    }
    if (distinct_valuations && c.g > 1 && c.mutual != c.l)
      report(out, rep, Check::Sandwich, "distinct valuations everywhere but o(a,b) != lcm");
  }

  void check_weakbound(const PairCore& c, const RepPair& rep, ChunkResult& out) const {
    if (c.product_order % (c.l / c.g) != 0 || c.l % c.product_order != 0)
      report(out, rep, Check::WeakBound,
             "abelian bound failed: o(ab)=" + std::to_string(c.product_order) +
                 " lcm=" + std::to_string(c.l) + " gcd=" + std::to_string(c.g));
  }

  void check_bounds34(const PairCore& c, const RepPair& rep, ChunkResult& out) const {
    bool ok;
    if (t_.big_constants_fit) {
      using I = __int128;
      ok = (static_cast<I>(c.mutual) * t_.B64) % c.product_order == 0 &&
           (static_cast<I>(c.product_order) * t_.C64) % c.mutual == 0;
    } else {
      ok = (BigInt(c.mutual) * t_.B) % c.product_order == 0 &&
           (BigInt(c.product_order) * t_.C) % c.mutual == 0;
    }
    if (!ok)
      report(out, rep, Check::Bounds34,
             "o(ab) | o(a,b)B / o(a,b) | o(ab)C failed: o(ab)=" +
                 std::to_string(c.product_order) + " o(a,b)=" + std::to_string(c.mutual));
  }

  void check_cor38(const PairCore& c, const RepPair& rep, ChunkResult& out) const {
    const std::int64_t e =
        t_.sub_meet[static_cast<std::size_t>(t_.sub_of[c.a]) * t_.subs.size() +
                    t_.sub_of[c.b]];
    const std::int64_t D = coprime_part(e, (c.m / c.g) * (c.n / c.g));
    const int eps = (D % 2 == 0) ? 2 : 1;
    bool ok;
    if (t_.big_constants_fit) {
      using I = __int128;
      const I lcmB = static_cast<I>(c.l) * t_.B64;
      ok = (lcmB % eps == 0) && ((lcmB / eps) % c.product_order == 0) &&
           ((static_cast<I>(c.product_order) * t_.C64) % (c.l / D) == 0);
    } else {
      const BigInt lcmB = BigInt(c.l) * t_.B;
      ok = (lcmB % eps == 0) && ((lcmB / eps) % c.product_order == 0) &&
           ((BigInt(c.product_order) * t_.C) % (c.l / D) == 0);
    }
    if (!ok)
      report(out, rep, Check::Cor38,
             "corollary bounds failed: o(ab)=" + std::to_string(c.product_order) +
                 " lcm=" + std::to_string(c.l) + " D=" + std::to_string(D) +
                 " eps=" + std::to_string(eps));
  }

  void check_hall36(const PairCore& c, const RepPair& rep, ChunkResult& out) const {
    if (c.product_order != c.mutual)
      report(out, rep, Check::Hall36,
             "o(ab)=" + std::to_string(c.product_order) +
                 " != o(a,b)=" + std::to_string(c.mutual) +
                 " although the class is below every prime in |G|");
  }

  // least k >= 1 with a^k commuting with b; the solution set is a subgroup
  // of Z containing o(a)
  std::int64_t least_commuting_exponent(const PairCore& c, const GroupElement& b_el) const {
    for (std::int64_t N : t_.divisors) {
      if (c.m % N) continue;
      if (commutes(G_.element(t_.pow_id(c.a, N)), b_el)) return N;
    }
    throw InternalInconsistency("least_commuting_exponent: o(a) power failed to commute");
  }

  void check_comm37(const PairCore& c, const RepPair& rep, ChunkResult& out) const {
    const GroupElement& a_el = G_.element(c.a);
    const GroupElement& b_el = G_.element(c.b);
    const std::int64_t k = least_commuting_exponent(c, b_el);
    const GroupElement comm = multiply(
        multiply(G_.element(G_.inverse_id(c.a)), G_.element(G_.inverse_id(c.b))),
        multiply(a_el, b_el));
    const std::int64_t r = G_.order_of(G_.id_of(comm));
    const std::int64_t q = std::gcd(r, k);
    if (!prime_factors_at_most_64(r / q, t_.gamma) ||
        !prime_factors_at_most_64(k / q, t_.gamma))
      report(out, rep, Check::Comm37,
             "o([a,b])/exponent ratio " + std::to_string(r) + "/" + std::to_string(k) +
                 " has a prime factor above the class");
  }

  void check_class2(const PairCore& c, const RepPair& rep, ChunkResult& out) const {
    const GroupElement& a_el = G_.element(c.a);
    const GroupElement& b_el = G_.element(c.b);
    const GroupElement comm_ba = multiply(
        multiply(G_.element(G_.inverse_id(c.b)), G_.element(G_.inverse_id(c.a))),
        multiply(b_el, a_el));
    const std::uint32_t c_id = G_.id_of(comm_ba);
    const std::int64_t r = G_.order_of(c_id);

    if (c.mutual % r != 0 || c.product_order % r != 0) {
      report(out, rep, Check::Class2, "r does not divide o(a,b) and o(ab)");
      return;
    }
    const std::int64_t q = c.mutual / r;

    Ratio predicted;
    if (r % 2 == 1) {
      predicted = make_ratio(1, 1);
    } else if (q % 2 == 1) {
      predicted = make_ratio(2, 1);
    } else {
      const GroupElement half = multiply(G_.element(t_.pow_id(c.a, c.mutual / 2)),
                                         G_.element(t_.pow_id(c.b, c.mutual / 2)));
      const bool witness = G_.id_of(half) == t_.pow_id(c_id, r / 2);
      const bool half_odd = (c.mutual / (2 * r)) % 2 == 1;
      predicted = (witness && half_odd) ? make_ratio(1, 2) : make_ratio(1, 1);
    }
    if (make_ratio(c.product_order, c.mutual) != predicted) {
      report(out, rep, Check::Class2,
             "corollary prediction " + to_string(predicted) + " but ratio " +
                 to_string(make_ratio(c.product_order, c.mutual)));
      return;
    }

    // the exact product formula, cross-multiplied
    const GroupElement x = multiply(G_.element(t_.pow_id(c.a, r)),
                                    G_.element(t_.pow_id(c.b, r)));
    const GroupElement y = power(comm_ba, r * (r - 1) / 2);
    const std::int64_t ox = G_.order_of(G_.id_of(x));
    const std::int64_t oxy = G_.order_of(G_.id_of(multiply(x, y)));
    if (c.product_order * ox != c.mutual * oxy) {
      report(out, rep, Check::Class2,
             "product formula failed: o(ab)=" + std::to_string(c.product_order) +
                 " o(a,b)=" + std::to_string(c.mutual) + " o(x)=" + std::to_string(ox) +
                 " o(xy)=" + std::to_string(oxy));
      return;
    }

    // commutator-order formulas (class-2 corollary): o(c) against both
    // centralizer quotients and both least-commuting exponents
    std::int64_t in_a = 0;
    for (std::uint32_t id : t_.subs[t_.sub_of[c.a]].members)
      if (commutes(G_.element(id), b_el)) ++in_a;
    std::int64_t in_b = 0;
    for (std::uint32_t id : t_.subs[t_.sub_of[c.b]].members)
      if (commutes(G_.element(id), a_el)) ++in_b;
    const std::int64_t exp_ab = least_commuting_exponent(c, b_el);
    PairCore swapped = c;
    std::swap(swapped.a, swapped.b);
    std::swap(swapped.m, swapped.n);
    const std::int64_t exp_ba = least_commuting_exponent(swapped, a_el);
    if (c.m % in_a != 0 || c.m / in_a != r || c.n % in_b != 0 || c.n / in_b != r ||
        exp_ab != r || exp_ba != r) {
      report(out, rep, Check::Class2,
             "commutator-order formulas disagree: r=" + std::to_string(r) +
                 " m/|<a> n C(b)|=" + std::to_string(in_a ? c.m / in_a : -1) +
                 " n/|<b> n C(a)|=" + std::to_string(in_b ? c.n / in_b : -1) +
                 " exp(a,b)=" + std::to_string(exp_ab) +
                 " exp(b,a)=" + std::to_string(exp_ba));
      return;
    }
    const std::int64_t e =
        t_.sub_meet[static_cast<std::size_t>(t_.sub_of[c.a]) * t_.subs.size() +
                    t_.sub_of[c.b]];
    if ((c.g / e) % r != 0) {
      report(out, rep, Check::Class2, "o(c) does not divide gcd(m,n)/e");
      return;
    }
    // coprimality corollary: two coprime values among m, n, o(c) force r = 1
    if ((std::gcd(c.m, c.n) == 1 || std::gcd(c.m, r) == 1 || std::gcd(c.n, r) == 1) &&
        r != 1)
      report(out, rep, Check::Class2, "coprimality corollary failed with r=" +
                                          std::to_string(r));
  }

  const PairTables& t_;
  const FiniteGroup& G_;
  std::array<bool, 8> enabled_{};
};

}  // namespace

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

std::string check_name(Check c) {
  switch (c) {
    case Check::Sandwich: return "sandwich";
    case Check::WeakBound: return "weakbound";
    case Check::Bounds34: return "bounds34";
    case Check::Cor38: return "cor38";
    case Check::Hall36: return "hall36";
    case Check::Comm37: return "comm37";
    case Check::Class2: return "class2";
  }
  return "?";
}

std::optional<Check> check_from_name(std::string_view name) {
  for (Check c : all_checks())
    if (check_name(c) == name) return c;
  return std::nullopt;
}

std::vector<Check> all_checks() {
  return {Check::Sandwich, Check::WeakBound, Check::Bounds34, Check::Cor38,
          Check::Hall36,   Check::Comm37,    Check::Class2};
}

std::vector<Check> applicable_checks(const FiniteGroup& G) {
  std::vector<Check> out{Check::Sandwich};
  const auto klass = G.nilpotency_class();
  if (!klass) return out;
  if (*klass <= 1) out.push_back(Check::WeakBound);
  out.push_back(Check::Bounds34);
  out.push_back(Check::Cor38);
  if (G.order() == 1 ||
      *klass < smallest_prime_factor(static_cast<std::int64_t>(G.order())))
    out.push_back(Check::Hall36);
  out.push_back(Check::Comm37);
  if (*klass <= 2) out.push_back(Check::Class2);
  return out;
}

SweepReport sweep(const FiniteGroup& G, const std::string& name,
                  const std::vector<Check>& checks, int workers) {
  if (workers < 1) throw ConfigError("sweep: worker count must be >= 1");
  const std::vector<Check> valid = applicable_checks(G);
  for (Check c : checks)
    if (std::find(valid.begin(), valid.end(), c) == valid.end())
      throw ConfigError("check '" + check_name(c) + "' does not apply to group '" + name +
                        "'");

  const auto t0 = std::chrono::steady_clock::now();
  const PairTables tables = build_tables(G);
  PairChecker checker(tables, checks);

  SweepReport rep;
  rep.group_name = name;
  rep.order = static_cast<std::int64_t>(G.order());
  rep.nilpotency_class = G.nilpotency_class();
  rep.checks = checks;
  std::sort(rep.checks.begin(), rep.checks.end());
  rep.checks.erase(std::unique(rep.checks.begin(), rep.checks.end()), rep.checks.end());
  rep.pairs_checked = tables.total_pairs;
  rep.orbit_count = tables.reps.size();

  const std::size_t R = tables.reps.size();
  const std::size_t nchunks = std::min<std::size_t>(static_cast<std::size_t>(workers), R ? R : 1);
  std::vector<ChunkResult> results(nchunks);
  auto run_chunk = [&](std::size_t chunk) {
    const std::size_t lo = R * chunk / nchunks;
    const std::size_t hi = R * (chunk + 1) / nchunks;
    for (std::size_t i = lo; i < hi; ++i) checker.run(tables.reps[i], results[chunk]);
  };
  if (nchunks == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t chunk = 0; chunk < nchunks; ++chunk)
      pool.emplace_back(run_chunk, chunk);
    for (std::thread& th : pool) th.join();
  }
  // merge in chunk order; violations keep ascending representative order
  for (ChunkResult& r : results) {
    for (const auto& [ratio, count] : r.census) rep.ratio_census[ratio] += count;
    for (Violation& v : r.violations) rep.violations.push_back(std::move(v));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::map<int, std::map<Ratio, std::uint64_t>> ratio_census(
    const std::vector<SweepReport>& reports) {
  std::map<int, std::map<Ratio, std::uint64_t>> out;
  for (const SweepReport& rep : reports) {
    if (!rep.nilpotency_class)
      throw ConfigError("ratio_census: group '" + rep.group_name + "' is not nilpotent");
    const int klass = std::max(*rep.nilpotency_class, 1);
    for (const auto& [ratio, count] : rep.ratio_census) {
      if (!prime_factors_at_most(BigInt(ratio.num), klass) ||
          !prime_factors_at_most(BigInt(ratio.den), klass))
        throw TheoremViolation("ratio " + to_string(ratio) + " in class-" +
                               std::to_string(klass) + " group '" + rep.group_name +
                               "' has a prime factor above the class");
      if (klass == 2 && !(ratio == Ratio{1, 2} || ratio == Ratio{1, 1} || ratio == Ratio{2, 1}))
        throw TheoremViolation("class-2 ratio " + to_string(ratio) + " outside {1/2, 1, 2}");
      out[klass][ratio] += count;
    }
  }
  return out;
}

void render_structured(const SweepReport& report, std::ostream& out) {
  out << "group " << report.group_name << "\n";
  out << "  order " << report.order << "\n";
  out << "  class ";
  if (report.nilpotency_class) out << *report.nilpotency_class;
  else out << "-";
  out << "\n  checks ";
  for (std::size_t i = 0; i < report.checks.size(); ++i)
    out << (i ? "," : "") << check_name(report.checks[i]);
  out << "\n  pairs " << report.pairs_checked << "\n";
  out << "  orbits " << report.orbit_count << "\n";
  for (const auto& [ratio, count] : report.ratio_census)
    out << "  ratio " << to_string(ratio) << " count " << count << "\n";
  out << "  violations " << report.violations.size() << "\n";
  for (const Violation& v : report.violations)
    out << "  violation check=" << v.check << " a=" << v.a_text << " b=" << v.b_text
        << " msg=" << v.message << "\n";
  out << "end\n";
}

void render_tabular_header(std::ostream& out) {
  out << "group\torder\tclass\tchecks\tpairs\torbits\tviolations\tratios\n";
}

void render_tabular(const SweepReport& report, std::ostream& out) {
  out << report.group_name << '\t' << report.order << '\t';
  if (report.nilpotency_class) out << *report.nilpotency_class;
  else out << '-';
  out << '\t';
  for (std::size_t i = 0; i < report.checks.size(); ++i)
    out << (i ? "," : "") << check_name(report.checks[i]);
  out << '\t' << report.pairs_checked << '\t' << report.orbit_count << '\t'
      << report.violations.size() << '\t';
  bool first = true;
  for (const auto& [ratio, count] : report.ratio_census) {
    out << (first ? "" : ";") << to_string(ratio) << ':' << count;
    first = false;
  }
  out << '\n';
}

}  // namespace ordcalc

#include "ordcalc/group.hpp"

#include <algorithm>
#include <deque>

namespace ordcalc {

namespace {

// Sorted ids of the subgroup generated by `seeds`, all taken inside G.
std::vector<std::uint32_t> subgroup_closure(const FiniteGroup& G,
                                            std::vector<std::uint32_t> seeds) {
  std::vector<bool> member(G.order(), false);
  std::vector<std::uint32_t> worklist;
  const std::uint32_t id0 = G.id_of(G.identity());
  member[id0] = true;
  worklist.push_back(id0);
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  for (std::uint32_t s : seeds) {
    if (!member[s]) {
      member[s] = true;
      worklist.push_back(s);
    }
  }
  // close under right multiplication by the seed set; since the seed set
  // here always contains inverses' products eventually (finite group), this
  // reaches the full subgroup
  for (std::size_t head = 0; head < worklist.size(); ++head) {
    const GroupElement& x = G.element(worklist[head]);
    for (std::uint32_t s : seeds) {
      const std::uint32_t z = G.id_of(multiply(x, G.element(s)));
      if (!member[z]) {
        member[z] = true;
        worklist.push_back(z);
      }
    }
  }
  std::sort(worklist.begin(), worklist.end());
  return worklist;
}

// Closure of `seeds` under conjugation by the generators of G.
std::vector<std::uint32_t> conjugation_closure(const FiniteGroup& G,
                                               std::vector<std::uint32_t> seeds) {
  std::vector<bool> member(G.order(), false);
  std::vector<std::uint32_t> worklist;
  std::sort(seeds.begin(), seeds.end());
  for (std::uint32_t s : seeds) {
    if (!member[s]) {
      member[s] = true;
      worklist.push_back(s);
    }
  }
  for (std::size_t head = 0; head < worklist.size(); ++head) {
    const GroupElement& x = G.element(worklist[head]);
    for (const GroupElement& g : G.generators()) {
      const std::uint32_t z = G.id_of(conjugate(x, g));
      if (!member[z]) {
        member[z] = true;
        worklist.push_back(z);
      }
    }
  }
  std::sort(worklist.begin(), worklist.end());
  return worklist;
}

// Normal closure in G of the subgroup generated by `seeds`.
std::vector<std::uint32_t> normal_closure(const FiniteGroup& G,
                                          std::vector<std::uint32_t> seeds) {
  return subgroup_closure(G, conjugation_closure(G, std::move(seeds)));
}

}  // namespace

FiniteGroup FiniteGroup::generate(std::vector<GroupElement> generators, std::size_t cap) {
  if (generators.empty())
    throw DomainError("generate: generator list must be nonempty");
  if (cap < 1) throw DomainError("generate: cap must be positive");
  for (const GroupElement& g : generators)
    if (!g.same_shape(generators.front()))
      throw RepresentationMismatch("generate: generators have incompatible representations");

  FiniteGroup G;
  G.generators_ = generators;
  const GroupElement id = identity_like(generators.front());
  G.elements_.push_back(id);
  G.index_.emplace(id, 0);
  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    const GroupElement x = G.elements_[head];  // copy: vector may reallocate
    for (const GroupElement& g : generators) {
      GroupElement z = multiply(x, g);
      if (G.index_.emplace(z, static_cast<std::uint32_t>(G.elements_.size())).second) {
        G.elements_.push_back(z);
        if (G.elements_.size() > cap)
          throw GroupTooLarge("generate: closure exceeded the cap of " +
                                  std::to_string(cap) + " elements",
                              cap);
      }
    }
  }

  G.orders_.reserve(G.elements_.size());
  G.inverse_ids_.resize(G.elements_.size());
  for (std::size_t i = 0; i < G.elements_.size(); ++i) {
    const std::int64_t o = element_order(G.elements_[i]);
    G.orders_.push_back(o);
    G.exponent_ = lcm64(G.exponent_, o);
    G.inverse_ids_[i] = G.index_.at(inverse(G.elements_[i]));
  }
  G.nilpotency_class_ = nilpotency_class_of(G);
  return G;
}

bool FiniteGroup::contains(const GroupElement& e) const {
  return index_.find(e) != index_.end();
}

std::optional<std::uint32_t> FiniteGroup::find(const GroupElement& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t FiniteGroup::id_of(const GroupElement& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw MembershipError("element does not belong to the group");
  return it->second;
}

bool ElementSet::contains(std::uint32_t id) const {
  return std::binary_search(ids.begin(), ids.end(), id);
}

ElementSet centralizer(const FiniteGroup& G, const GroupElement& g) {
  if (!G.contains(g)) throw MembershipError("centralizer: element not in the group");
  ElementSet out;
  out.group = &G;
  for (std::uint32_t i = 0; i < G.order(); ++i)
    if (commutes(G.element(i), g)) out.ids.push_back(i);
  return out;
}

std::vector<ElementSet> lower_central_series(const FiniteGroup& G) {
  std::vector<ElementSet> series;
  ElementSet whole;
  whole.group = &G;
  whole.ids.resize(G.order());
  for (std::uint32_t i = 0; i < G.order(); ++i) whole.ids[i] = i;
  series.push_back(std::move(whole));

  while (true) {
    const std::vector<std::uint32_t>& current = series.back().ids;
    // [g_i, G] is the normal closure of the commutators of its elements
    // with the generators of G
    std::vector<std::uint32_t> seeds;
    for (std::uint32_t s : current)
      for (const GroupElement& g : G.generators())
        seeds.push_back(G.id_of(commutator(G.element(s), g)));
    std::vector<std::uint32_t> next = normal_closure(G, std::move(seeds));
    if (next.size() == current.size()) break;  // stable (next <= current always)
    ElementSet term;
    term.group = &G;
    term.ids = std::move(next);
    series.push_back(std::move(term));
    if (series.back().ids.size() == 1) break;  // reached the trivial subgroup
  }
  return series;
}

std::optional<int> nilpotency_class_of(const FiniteGroup& G) {
  const std::vector<ElementSet> series = lower_central_series(G);
  if (series.back().ids.size() != 1) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

bool is_central(const FiniteGroup& G, const GroupElement& g) {
  for (const GroupElement& x : G.generators())
    if (!commutes(g, x)) return false;
  return true;
}

}  // namespace ordcalc

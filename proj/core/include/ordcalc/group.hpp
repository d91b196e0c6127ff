#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ordcalc/element.hpp"

namespace ordcalc {

inline constexpr std::size_t kDefaultClosureCap = 20000;

/// A fully enumerated finite group. Elements are indexed by their position
/// in the breadth-first closure order (identity first, then generators in
/// the order given, then the rest of the BFS), which makes every downstream
/// report byte-stable. Immutable after construction; safe to share
/// read-only across threads.
class FiniteGroup {
public:
  /// Breadth-first closure of a nonempty, representation-compatible
  /// generator list. Throws GroupTooLarge when the closure exceeds `cap`.
  static FiniteGroup generate(std::vector<GroupElement> generators,
                              std::size_t cap = kDefaultClosureCap);

  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(std::uint32_t id) const { return elements_[id]; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const GroupElement& identity() const { return elements_[0]; }

  bool contains(const GroupElement& e) const;
  std::optional<std::uint32_t> find(const GroupElement& e) const;
  std::uint32_t id_of(const GroupElement& e) const;  // MembershipError if absent

  std::int64_t order_of(std::uint32_t id) const { return orders_[id]; }
  std::uint32_t inverse_id(std::uint32_t id) const { return inverse_ids_[id]; }

  /// lcm of all element orders.
  std::int64_t exponent() const { return exponent_; }

  /// Nilpotency class; absent when the lower central series stabilizes
  /// above the trivial subgroup.
  std::optional<int> nilpotency_class() const { return nilpotency_class_; }

private:
  FiniteGroup() = default;

  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::uint32_t, ElementHash> index_;
  std::vector<std::int64_t> orders_;
  std::vector<std::uint32_t> inverse_ids_;
  std::int64_t exponent_ = 1;
  std::optional<int> nilpotency_class_;
};

/// A subgroup (or subset) given by sorted element ids into an ambient group.
struct ElementSet {
  const FiniteGroup* group = nullptr;
  std::vector<std::uint32_t> ids;  // sorted ascending

  std::size_t size() const { return ids.size(); }
  bool contains(std::uint32_t id) const;
};

/// Elements of G commuting with g. Throws MembershipError when g is not in G.
ElementSet centralizer(const FiniteGroup& G, const GroupElement& g);

/// Lower central series G = g1 >= g2 >= ..., strictly decreasing, ending at
/// the first stable term (the trivial subgroup iff G is nilpotent).
std::vector<ElementSet> lower_central_series(const FiniteGroup& G);

/// Number of steps the series takes to reach the trivial subgroup, or
/// absent when it stabilizes earlier.
std::optional<int> nilpotency_class_of(const FiniteGroup& G);

bool is_central(const FiniteGroup& G, const GroupElement& g);

}  // namespace ordcalc

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordcalc/group.hpp"

namespace ordcalc {

/// One named group of the built-in verification corpus. After generation
/// the actual order and class are checked against the expected fields.
struct CatalogEntry {
  std::string name;
  std::string description;
  std::int64_t expected_order = 1;
  std::optional<int> expected_class;   // absent for non-nilpotent entries
  std::optional<std::int64_t> prime;   // set for p-groups
  std::function<FiniteGroup(std::size_t cap)> builder;
};

/// The full corpus, in a fixed order.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* find_entry(std::string_view name);

/// Builds the group and validates order and class against the entry.
FiniteGroup build_entry(const CatalogEntry& entry, std::size_t cap = kDefaultClosureCap);

/// Left regular permutation representation of G (degree |G|).
FiniteGroup regular_representation(const FiniteGroup& G, std::size_t cap = kDefaultClosureCap);

/// Direct product acting on disjoint point sets; matrix factors are first
/// converted to their regular representation.
FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B,
                           std::size_t cap = kDefaultClosureCap);

}  // namespace ordcalc

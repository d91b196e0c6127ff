#include "ordcalc/catalog.hpp"

#include <array>
#include <mutex>

namespace ordcalc {

namespace {

GroupElement perm_from_cycles(int degree,
                              const std::vector<std::vector<int>>& cycles_1based) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  for (const auto& cycle : cycles_1based)
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()] - 1;
  return GroupElement::permutation(images);
}

GroupElement heisenberg_x(int modulus) {
  const std::array<int, 9> rows = {1, 1, 0, 0, 1, 0, 0, 0, 1};
  return GroupElement::unitriangular(3, modulus, rows);
}

GroupElement heisenberg_y(int modulus) {
  const std::array<int, 9> rows = {1, 0, 0, 0, 1, 1, 0, 0, 1};
  return GroupElement::unitriangular(3, modulus, rows);
}

FiniteGroup heisenberg(int modulus, std::size_t cap) {
  return FiniteGroup::generate({heisenberg_x(modulus), heisenberg_y(modulus)}, cap);
}

FiniteGroup unitriangular4(int modulus, std::size_t cap) {
  std::vector<GroupElement> gens;
  for (int k = 0; k < 3; ++k) {
    std::array<int, 16> rows{};
    for (int i = 0; i < 4; ++i) rows[static_cast<std::size_t>(i * 4 + i)] = 1;
    rows[static_cast<std::size_t>(k * 4 + k + 1)] = 1;
    gens.push_back(GroupElement::unitriangular(4, modulus, rows));
  }
  return FiniteGroup::generate(std::move(gens), cap);
}

FiniteGroup dihedral(int n, std::size_t cap) {  // order 2n on n points
  std::vector<int> rot;
  for (int i = 0; i < n; ++i) rot.push_back((i + 1) % n);
  std::vector<int> refl;
  for (int i = 0; i < n; ++i) refl.push_back((n - i) % n);
  return FiniteGroup::generate(
      {GroupElement::permutation(rot), GroupElement::permutation(refl)}, cap);
}

FiniteGroup quaternion8(std::size_t cap) {
  // left translations on the eight unit quaternions 1,-1,i,-i,j,-j,k,-k
  const GroupElement i = perm_from_cycles(8, {{1, 3, 2, 4}, {5, 7, 6, 8}});
  const GroupElement j = perm_from_cycles(8, {{1, 5, 2, 6}, {3, 8, 4, 7}});
  return FiniteGroup::generate({i, j}, cap);
}

FiniteGroup modular16(std::size_t cap) {
  // left translations of <a, b | a^8, b^2, b a b^-1 = a^5> on its 16
  // elements (k, l) -> index k + 8l
  std::vector<int> ia(16), ib(16);
  for (int k = 0; k < 8; ++k)
    for (int l = 0; l < 2; ++l) {
      ia[static_cast<std::size_t>(k + 8 * l)] = (k + 1) % 8 + 8 * l;
      ib[static_cast<std::size_t>(k + 8 * l)] = (5 * k) % 8 + 8 * ((l + 1) % 2);
    }
  return FiniteGroup::generate(
      {GroupElement::permutation(ia), GroupElement::permutation(ib)}, cap);
}

FiniteGroup cyclic_product(const std::vector<int>& sizes, std::size_t cap) {
  int degree = 0;
  for (int s : sizes) degree += s;
  std::vector<GroupElement> gens;
  int base = 1;
  for (int s : sizes) {
    std::vector<int> cycle;
    for (int i = 0; i < s; ++i) cycle.push_back(base + i);
    gens.push_back(perm_from_cycles(degree, {cycle}));
    base += s;
  }
  return FiniteGroup::generate(std::move(gens), cap);
}

FiniteGroup symmetric4(std::size_t cap) {
  return FiniteGroup::generate(
      {perm_from_cycles(4, {{1, 2, 3, 4}}), perm_from_cycles(4, {{1, 2}})}, cap);
}

FiniteGroup s3_times_c4(std::size_t cap) {
  return FiniteGroup::generate({perm_from_cycles(7, {{1, 2, 3}}),
                                perm_from_cycles(7, {{1, 2}}),
                                perm_from_cycles(7, {{4, 5, 6, 7}})},
                               cap);
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> list;
  auto add = [&list](std::string name, std::string description, std::int64_t order,
                     std::optional<int> klass, std::optional<std::int64_t> prime,
                     std::function<FiniteGroup(std::size_t)> builder) {
    list.push_back(CatalogEntry{std::move(name), std::move(description), order, klass,
                                prime, std::move(builder)});
  };

  add("D4", "dihedral group of order 8", 8, 2, 2,
      [](std::size_t cap) { return dihedral(4, cap); });
  add("Q8", "quaternion group", 8, 2, 2, quaternion8);
  add("dih16", "dihedral group of order 16", 16, 3, 2,
      [](std::size_t cap) { return dihedral(8, cap); });
  add("mod16", "modular (semidihedral-like) group of order 16", 16, 2, 2, modular16);
  add("heis3", "3x3 unitriangular matrices over Z/3", 27, 2, 3,
      [](std::size_t cap) { return heisenberg(3, cap); });
  add("heis4", "3x3 unitriangular matrices over Z/4", 64, 2, 2,
      [](std::size_t cap) { return heisenberg(4, cap); });
  add("heis5", "3x3 unitriangular matrices over Z/5", 125, 2, 5,
      [](std::size_t cap) { return heisenberg(5, cap); });
  add("heis9", "3x3 unitriangular matrices over Z/9", 729, 2, 3,
      [](std::size_t cap) { return heisenberg(9, cap); });
  add("heis27", "3x3 unitriangular matrices over Z/27", 19683, 2, 3,
      [](std::size_t cap) { return heisenberg(27, cap); });
  add("ut4_2", "4x4 unitriangular matrices over Z/2", 64, 3, 2,
      [](std::size_t cap) { return unitriangular4(2, cap); });
  add("ut4_3", "4x4 unitriangular matrices over Z/3", 729, 3, 3,
      [](std::size_t cap) { return unitriangular4(3, cap); });
  add("c4xc6", "Z/4 x Z/6", 24, 1, std::nullopt,
      [](std::size_t cap) { return cyclic_product({4, 6}, cap); });
  add("c12xc18", "Z/12 x Z/18", 216, 1, std::nullopt,
      [](std::size_t cap) { return cyclic_product({12, 18}, cap); });
  add("d4xc3", "D4 x Z/3", 24, 2, std::nullopt, [](std::size_t cap) {
    return direct_product(dihedral(4, cap), cyclic_product({3}, cap), cap);
  });
  add("d4xq8", "D4 x Q8", 64, 2, 2, [](std::size_t cap) {
    return direct_product(dihedral(4, cap), quaternion8(cap), cap);
  });
  add("S4", "symmetric group on 4 points", 24, std::nullopt, std::nullopt, symmetric4);
  add("s3xc4", "S3 x Z/4", 24, std::nullopt, std::nullopt, s3_times_c4);
  return list;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static std::once_flag flag;
  static std::vector<CatalogEntry> list;
  std::call_once(flag, [] { list = make_catalog(); });
  return list;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

FiniteGroup build_entry(const CatalogEntry& entry, std::size_t cap) {
  FiniteGroup G = entry.builder(cap);
  if (static_cast<std::int64_t>(G.order()) != entry.expected_order)
    throw InternalInconsistency("catalog entry " + entry.name + ": order " +
                                std::to_string(G.order()) + " != expected " +
                                std::to_string(entry.expected_order));
  if (G.nilpotency_class() != entry.expected_class)
    throw InternalInconsistency("catalog entry " + entry.name +
                                ": nilpotency class mismatch");
  return G;
}

FiniteGroup regular_representation(const FiniteGroup& G, std::size_t cap) {
  const int degree = static_cast<int>(G.order());
  std::vector<GroupElement> gens;
  for (const GroupElement& g : G.generators()) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i)
      images[static_cast<std::size_t>(i)] =
          static_cast<int>(G.id_of(multiply(g, G.element(static_cast<std::uint32_t>(i)))));
    gens.push_back(GroupElement::permutation(images));
  }
  return FiniteGroup::generate(std::move(gens), cap);
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B, std::size_t cap) {
  const FiniteGroup& pa = A.identity().is_permutation() ? A : regular_representation(A, cap);
  const FiniteGroup& pb = B.identity().is_permutation() ? B : regular_representation(B, cap);
  const int da = pa.identity().degree();
  const int db = pb.identity().degree();
  std::vector<GroupElement> gens;
  for (const GroupElement& g : pa.generators()) {
    std::vector<int> images(static_cast<std::size_t>(da + db));
    for (int i = 0; i < da; ++i) images[static_cast<std::size_t>(i)] = g.image(i);
    for (int i = 0; i < db; ++i) images[static_cast<std::size_t>(da + i)] = da + i;
    gens.push_back(GroupElement::permutation(images));
  }
  for (const GroupElement& g : pb.generators()) {
    std::vector<int> images(static_cast<std::size_t>(da + db));
    for (int i = 0; i < da; ++i) images[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < db; ++i) images[static_cast<std::size_t>(da + i)] = da + g.image(i);
    gens.push_back(GroupElement::permutation(images));
  }
  return FiniteGroup::generate(std::move(gens), cap);
}

}  // namespace ordcalc

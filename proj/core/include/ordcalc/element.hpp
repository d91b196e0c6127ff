#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>

#include "ordcalc/errors.hpp"
#include "ordcalc/numeric.hpp"

namespace ordcalc {

inline constexpr int kMaxPermutationDegree = 64;
inline constexpr int kMaxMatrixDimension = 8;
inline constexpr int kMaxMatrixModulus = 255;

enum class ReprKind : std::uint8_t { Permutation, Unitriangular };

/// A finite group element: either a permutation of {0,...,n-1} stored as an
/// image table, or an upper unitriangular d x d matrix over Z/m stored as its
/// packed strictly-upper part. Elements are plain values: trivially copyable,
/// hashable, and comparable byte-for-byte (unused payload is kept zeroed).
class GroupElement {
public:
  GroupElement() = default;

  /// images[i] is the image of point i (0-based); must be a bijection.
  static GroupElement permutation(std::span<const int> images);
  static GroupElement identity_permutation(int degree);

  /// entries: full d*d row-major matrix; entries are reduced mod `modulus`,
  /// then the unit diagonal and zero lower part are enforced.
  static GroupElement unitriangular(int dim, int modulus, std::span<const int> entries);
  static GroupElement identity_unitriangular(int dim, int modulus);

  ReprKind kind() const { return kind_; }
  bool is_permutation() const { return kind_ == ReprKind::Permutation; }

  int degree() const { return size_; }   // permutations
  int dim() const { return size_; }      // matrices
  int modulus() const { return modulus_; }

  /// Image of a point under a permutation.
  int image(int point) const { return data_[static_cast<std::size_t>(point)]; }

  /// Matrix entry (row, col) including the implicit diagonal/lower part.
  int entry(int row, int col) const;

  bool is_identity() const;
  bool same_shape(const GroupElement& other) const {
    return kind_ == other.kind_ && size_ == other.size_ && modulus_ == other.modulus_;
  }

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.kind_ == y.kind_ && x.size_ == y.size_ && x.modulus_ == y.modulus_ &&
           std::memcmp(x.data_.data(), y.data_.data(), x.payload_size()) == 0;
  }

  std::size_t hash() const;

private:
  friend GroupElement multiply(const GroupElement&, const GroupElement&);
  friend GroupElement inverse(const GroupElement&);

  std::size_t payload_size() const;
  int upper_index(int row, int col) const {  // packed strictly-upper offset
    return row * size_ - row * (row + 1) / 2 + (col - row - 1);
  }

  ReprKind kind_ = ReprKind::Permutation;
  std::uint8_t size_ = 0;     // degree or dimension
  std::uint8_t modulus_ = 0;  // 0 for permutations
  std::array<std::uint8_t, kMaxPermutationDegree> data_{};
};

/// Group product. For permutations, (x*y)(p) = x(y(p)); for matrices, the
/// ordinary matrix product. Throws RepresentationMismatch on shape clash.
GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);

/// x^k by square-and-multiply; k may be negative or zero.
GroupElement power(const GroupElement& x, std::int64_t k);
GroupElement power(const GroupElement& x, const BigInt& k);

/// Least k >= 1 with x^k = identity. Permutation orders come from the lcm
/// of cycle lengths.
std::int64_t element_order(const GroupElement& x);

/// [x, y] = x^-1 y^-1 x y.
GroupElement commutator(const GroupElement& x, const GroupElement& y);

/// g^-1 x g.
GroupElement conjugate(const GroupElement& x, const GroupElement& g);

bool commutes(const GroupElement& x, const GroupElement& y);

GroupElement identity_like(const GroupElement& x);

struct ElementHash {
  std::size_t operator()(const GroupElement& e) const { return e.hash(); }
};

}  // namespace ordcalc

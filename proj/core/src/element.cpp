#include "ordcalc/element.hpp"

#include <algorithm>
#include <numeric>

namespace ordcalc {

namespace {

void require_same_shape(const GroupElement& x, const GroupElement& y) {
  if (!x.same_shape(y))
    throw RepresentationMismatch("elements have incompatible representations");
}

}  // namespace

GroupElement GroupElement::permutation(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1 || n > kMaxPermutationDegree)
    throw DomainError("permutation degree must be in [1, " +
                      std::to_string(kMaxPermutationDegree) + "]");
  std::array<bool, kMaxPermutationDegree> seen{};
  GroupElement e;
  e.kind_ = ReprKind::Permutation;
  e.size_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) {
    const int img = images[static_cast<std::size_t>(i)];
    if (img < 0 || img >= n || seen[static_cast<std::size_t>(img)])
      throw DomainError("permutation images must form a bijection of {0,...,n-1}");
    seen[static_cast<std::size_t>(img)] = true;
    e.data_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(img);
  }
  return e;
}

GroupElement GroupElement::identity_permutation(int degree) {
  if (degree < 1 || degree > kMaxPermutationDegree)
    throw DomainError("permutation degree must be in [1, " +
                      std::to_string(kMaxPermutationDegree) + "]");
  GroupElement e;
  e.kind_ = ReprKind::Permutation;
  e.size_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i) e.data_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return e;
}

GroupElement GroupElement::unitriangular(int dim, int modulus, std::span<const int> entries) {
  if (dim < 1 || dim > kMaxMatrixDimension)
    throw DomainError("matrix dimension must be in [1, " +
                      std::to_string(kMaxMatrixDimension) + "]");
  if (modulus < 2 || modulus > kMaxMatrixModulus)
    throw DomainError("matrix modulus must be in [2, " +
                      std::to_string(kMaxMatrixModulus) + "]");
  if (static_cast<int>(entries.size()) != dim * dim)
    throw DomainError("unitriangular element needs dim*dim row-major entries");
  GroupElement e;
  e.kind_ = ReprKind::Unitriangular;
  e.size_ = static_cast<std::uint8_t>(dim);
  e.modulus_ = static_cast<std::uint8_t>(modulus);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      int v = entries[static_cast<std::size_t>(i * dim + j)] % modulus;
      if (v < 0) v += modulus;
      if (i == j) {
        if (v != 1) throw DomainError("unitriangular matrix must have unit diagonal");
      } else if (i > j) {
        if (v != 0) throw DomainError("unitriangular matrix must vanish below the diagonal");
      } else {
        e.data_[static_cast<std::size_t>(e.upper_index(i, j))] = static_cast<std::uint8_t>(v);
      }
    }
  }
  return e;
}

GroupElement GroupElement::identity_unitriangular(int dim, int modulus) {
  std::array<int, kMaxMatrixDimension * kMaxMatrixDimension> id{};
  for (int i = 0; i < dim; ++i) id[static_cast<std::size_t>(i * dim + i)] = 1;
  return unitriangular(dim, modulus, std::span<const int>(id.data(), static_cast<std::size_t>(dim * dim)));
}

int GroupElement::entry(int row, int col) const {
  if (row == col) return 1;
  if (row > col) return 0;
  return data_[static_cast<std::size_t>(upper_index(row, col))];
}

bool GroupElement::is_identity() const {
  if (kind_ == ReprKind::Permutation) {
    for (int i = 0; i < size_; ++i)
      if (data_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }
  const std::size_t count = payload_size();
  for (std::size_t i = 0; i < count; ++i)
    if (data_[i]) return false;
  return true;
}

std::size_t GroupElement::payload_size() const {
  if (kind_ == ReprKind::Permutation) return size_;
  return static_cast<std::size_t>(size_) * (size_ - 1) / 2;
}

std::size_t GroupElement::hash() const {
  // FNV-1a over the header and meaningful payload
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint8_t>(kind_));
  mix(size_);
  mix(modulus_);
  const std::size_t count = payload_size();
  for (std::size_t i = 0; i < count; ++i) mix(data_[i]);
  return static_cast<std::size_t>(h);
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  require_same_shape(x, y);
  GroupElement z;
  z.kind_ = x.kind_;
  z.size_ = x.size_;
  z.modulus_ = x.modulus_;
  if (x.kind_ == ReprKind::Permutation) {
    for (int p = 0; p < x.size_; ++p)
      z.data_[static_cast<std::size_t>(p)] = x.data_[y.data_[static_cast<std::size_t>(p)]];
    return z;
  }
  const int d = x.size_;
  const int m = x.modulus_;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      int acc = x.data_[static_cast<std::size_t>(x.upper_index(i, j))] +
                y.data_[static_cast<std::size_t>(y.upper_index(i, j))];
      for (int k = i + 1; k < j; ++k)
        acc += x.data_[static_cast<std::size_t>(x.upper_index(i, k))] *
               y.data_[static_cast<std::size_t>(y.upper_index(k, j))];
      z.data_[static_cast<std::size_t>(z.upper_index(i, j))] = static_cast<std::uint8_t>(acc % m);
    }
  }
  return z;
}

GroupElement inverse(const GroupElement& x) {
  GroupElement z;
  z.kind_ = x.kind_;
  z.size_ = x.size_;
  z.modulus_ = x.modulus_;
  if (x.kind_ == ReprKind::Permutation) {
    for (int p = 0; p < x.size_; ++p)
      z.data_[x.data_[static_cast<std::size_t>(p)]] = static_cast<std::uint8_t>(p);
    return z;
  }
  // (I + N)^-1 = I - N + N^2 - ... with N strictly upper, so the series
  // stops after dim-1 terms.
  const int d = x.size_;
  const int m = x.modulus_;
  // Work on packed strictly-upper vectors directly.
  std::array<int, kMaxPermutationDegree> acc{};   // packed inverse-minus-identity
  std::array<int, kMaxPermutationDegree> cur{};   // packed N^t
  const std::size_t count = x.payload_size();
  for (std::size_t i = 0; i < count; ++i) cur[i] = x.data_[i];
  int sign = -1;
  for (int t = 1; t < d; ++t) {
    for (std::size_t i = 0; i < count; ++i) {
      acc[i] += sign * cur[i];
      acc[i] %= m;
    }
    if (t + 1 < d) {
      // cur <- cur * N
      std::array<int, kMaxPermutationDegree> next{};
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          int s = 0;
          for (int k = i + 1; k < j; ++k)
            s += cur[static_cast<std::size_t>(x.upper_index(i, k))] *
                 x.data_[static_cast<std::size_t>(x.upper_index(k, j))];
          next[static_cast<std::size_t>(x.upper_index(i, j))] = s % m;
        }
      cur = next;
    }
    sign = -sign;
  }
  for (std::size_t i = 0; i < count; ++i) {
    int v = acc[i] % m;
    if (v < 0) v += m;
    z.data_[i] = static_cast<std::uint8_t>(v);
  }
  return z;
}

GroupElement power(const GroupElement& x, std::int64_t k) {
  if (k < 0) return power(inverse(x), -k);
  GroupElement acc = identity_like(x);
  GroupElement base = x;
  while (k) {
    if (k & 1) acc = multiply(acc, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return acc;
}

GroupElement power(const GroupElement& x, const BigInt& k) {
  if (k < 0) return power(inverse(x), BigInt(-k));
  GroupElement acc = identity_like(x);
  GroupElement base = x;
  BigInt e = k;
  while (e != 0) {
    if (boost::multiprecision::bit_test(e, 0)) acc = multiply(acc, base);
    e >>= 1;
    if (e != 0) base = multiply(base, base);
  }
  return acc;
}

std::int64_t element_order(const GroupElement& x) {
  if (x.is_permutation()) {
    std::array<bool, kMaxPermutationDegree> seen{};
    std::int64_t ord = 1;
    for (int start = 0; start < x.degree(); ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      int len = 0;
      int p = start;
      do {
        seen[static_cast<std::size_t>(p)] = true;
        p = x.image(p);
        ++len;
      } while (p != start);
      ord = lcm64(ord, len);
    }
    return ord;
  }
  GroupElement y = x;
  std::int64_t ord = 1;
  // order of a unitriangular matrix over Z/m is bounded well below this cap
  const std::int64_t cap =
      static_cast<std::int64_t>(x.modulus()) * x.modulus() * x.dim() * x.dim() + 1;
  while (!y.is_identity()) {
    y = multiply(y, x);
    if (++ord > cap)
      throw InternalInconsistency("element_order: iteration cap exceeded");
  }
  return ord;
}

GroupElement commutator(const GroupElement& x, const GroupElement& y) {
  return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

GroupElement conjugate(const GroupElement& x, const GroupElement& g) {
  return multiply(inverse(g), multiply(x, g));
}

bool commutes(const GroupElement& x, const GroupElement& y) {
  return multiply(x, y) == multiply(y, x);
}

GroupElement identity_like(const GroupElement& x) {
  if (x.is_permutation()) return GroupElement::identity_permutation(x.degree());
  return GroupElement::identity_unitriangular(x.dim(), x.modulus());
}

}  // namespace ordcalc

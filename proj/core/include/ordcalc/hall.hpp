#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ordcalc/numeric.hpp"

namespace ordcalc::hall {

inline constexpr int kDefaultMaxClass = 6;

/// One basic commutator. Generators a, b carry indices 0 and 1; a composite
/// commutator [c_left, c_right] satisfies the Hall conditions: left > right,
/// and when c_left = [s, t], right >= t. Indices are assigned in
/// nondecreasing weight order, ties broken by (left, right).
struct BasicCommutator {
  int index = 0;
  int weight = 1;
  int left = -1;   // -1 for generators
  int right = -1;

  bool is_generator() const { return left < 0; }
};

/// The basic-commutator basis of the free nilpotent group of class `gamma`
/// on two generators. Built once per class and shared read-only.
class Basis {
public:
  static const Basis& for_class(int gamma, int max_class = kDefaultMaxClass);

  int gamma() const { return gamma_; }
  int size() const { return static_cast<int>(items_.size()); }
  const BasicCommutator& at(int index) const { return items_[static_cast<std::size_t>(index)]; }
  const std::vector<BasicCommutator>& items() const { return items_; }

  /// Index of [c_left, c_right], or -1 when that pair is not basic or its
  /// weight exceeds gamma.
  int find_pair(int left, int right) const;

  /// "a", "b", or the fully expanded bracket, e.g. "[[b,a],a]".
  std::string name(int index) const;

private:
  explicit Basis(int gamma);

  int gamma_;
  std::vector<BasicCommutator> items_;
};

/// A letter of a word over the basis: basis index plus an integer exponent
/// (usually +1 or -1).
struct SignedLetter {
  int index = 0;
  std::int64_t exponent = 1;
};

/// Normal form c_0^{e_0} c_1^{e_1} ... c_r^{e_r} over the class-gamma basis.
struct NormalWord {
  int gamma = 1;
  std::vector<BigInt> exponents;

  bool is_identity() const;
  friend bool operator==(const NormalWord&, const NormalWord&) = default;
};

NormalWord identity_word(int gamma, int max_class = kDefaultMaxClass);

/// Normal form of a word; commutators of weight above gamma vanish.
NormalWord collect(std::span<const SignedLetter> word, int gamma,
                   int max_class = kDefaultMaxClass);

NormalWord multiply(const NormalWord& x, const NormalWord& y);
NormalWord inverse(const NormalWord& x);

/// Integer-valued polynomial sum lambda_l * C(x, l), l = 1..w. No constant
/// term, so f(0) = 0 always.
struct BinomialPolynomial {
  std::vector<BigInt> lambda;  // lambda[l-1] multiplies C(x, l)

  BigInt operator()(const BigInt& x) const;
  int degree_bound() const { return static_cast<int>(lambda.size()); }
};

/// The polynomials f_k with (ab)^n = a^n b^n c_2^{f_2(n)} ... c_r^{f_r(n)},
/// recovered by interpolation and revalidated against direct collection.
struct HallPolynomials {
  int gamma = 1;
  std::vector<BinomialPolynomial> f;  // f[k] defined for basis indices k >= 2

  const BinomialPolynomial& at(int k) const { return f[static_cast<std::size_t>(k)]; }
};

const HallPolynomials& hall_polynomials(int gamma, int max_class = kDefaultMaxClass);

/// Counts of formally distinct complex commutators per weight (degenerate
/// ones included): N(1) = 2, N(w) = sum N(i) N(w-i). r_formal is the
/// greatest zero-based index over all weights <= gamma.
struct FormalCount {
  std::vector<std::int64_t> per_weight;  // per_weight[w-1] = N(w)
  std::int64_t r_formal = 1;
};

FormalCount formal_commutator_count(int gamma);

/// Zero-based position of reduced basis element k inside the full formal
/// enumeration (weight-ordered, degenerates included).
std::int64_t formal_index_of(int gamma, int k, int max_class = kDefaultMaxClass);

/// True iff (X / gamma!) divides f_k(X) for every k in the class-gamma
/// basis. Requires gamma! | X.
bool divisibility_check(int gamma, const BigInt& X, int max_class = kDefaultMaxClass);

/// A(gamma) = (gamma!)^(r_formal - 2), B = gamma! * prod A(i),
/// C = gamma! * prod A(i)*(i-1)!; all primes dividing them are <= gamma.
struct ClassConstants {
  int gamma = 1;
  std::int64_t r_formal = 1;
  BigInt A = 1;
  BigInt B = 1;
  BigInt C = 1;
  BigInt B_prime = 1;  // B / gamma!
  BigInt C_prime = 1;  // C / gamma!
};

ClassConstants class_constants(int gamma, int max_class = kDefaultMaxClass);

}  // namespace ordcalc::hall

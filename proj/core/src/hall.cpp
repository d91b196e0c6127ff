#include "ordcalc/hall.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace ordcalc::hall {

namespace {

void check_class(int gamma, int max_class) {
  if (max_class < 1) throw DomainError("max_class must be >= 1");
  if (gamma < 1 || gamma > max_class)
    throw DomainError("nilpotency class must be in [1, " + std::to_string(max_class) + "]");
}

// ---------------------------------------------------------------------------
// Truncated series over noncommuting letters x (= a - 1) and y (= b - 1):
// coefficients are indexed by binary words of length <= gamma, the first
// letter of a word in the high bits. Products of length above gamma are
// dropped, which is exactly the class-gamma truncation: the quotient map
// a -> 1+x, b -> 1+y is faithful on the free nilpotent group of class gamma.
// ---------------------------------------------------------------------------

int word_offset(int len) { return (1 << len) - 1; }

struct Series {
  int gamma = 1;
  std::vector<BigInt> c;

  explicit Series(int g) : gamma(g), c(static_cast<std::size_t>(word_offset(g + 1))) {}
};

Series series_one(int gamma) {
  Series s(gamma);
  s.c[0] = 1;
  return s;
}

Series series_generator(int gamma, int which) {
  Series s = series_one(gamma);
  s.c[static_cast<std::size_t>(word_offset(1) + which)] = 1;
  return s;
}

Series series_mul(const Series& a, const Series& b) {
  Series out(a.gamma);
  const int g = a.gamma;
  for (int l1 = 0; l1 <= g; ++l1) {
    for (int bits1 = 0; bits1 < (1 << l1); ++bits1) {
      const BigInt& av = a.c[static_cast<std::size_t>(word_offset(l1) + bits1)];
      if (av == 0) continue;
      for (int l2 = 0; l2 + l1 <= g; ++l2) {
        const int base_out = word_offset(l1 + l2) + (bits1 << l2);
        const int base_in = word_offset(l2);
        for (int bits2 = 0; bits2 < (1 << l2); ++bits2) {
          const BigInt& bv = b.c[static_cast<std::size_t>(base_in + bits2)];
          if (bv == 0) continue;
          out.c[static_cast<std::size_t>(base_out + bits2)] += av * bv;
        }
      }
    }
  }
  return out;
}

Series series_inverse(const Series& u) {
  if (u.c[0] != 1)
    throw InternalInconsistency("series_inverse: constant term must be 1");
  // V = 1 - N*V converges in gamma steps for N = U - 1
  Series n = u;
  n.c[0] = 0;
  Series v = series_one(u.gamma);
  for (int t = 0; t < u.gamma; ++t) {
    Series nv = series_mul(n, v);
    v = series_one(u.gamma);
    for (std::size_t i = 0; i < v.c.size(); ++i) v.c[i] -= nv.c[i];
  }
  return v;
}

Series series_pow(const Series& base, const BigInt& e) {
  if (e < 0) return series_pow(series_inverse(base), BigInt(-e));
  Series acc = series_one(base.gamma);
  Series b = base;
  BigInt k = e;
  while (k != 0) {
    if (boost::multiprecision::bit_test(k, 0)) acc = series_mul(acc, b);
    k >>= 1;
    if (k != 0) b = series_mul(b, b);
  }
  return acc;
}

bool series_is_one(const Series& u) {
  if (u.c[0] != 1) return false;
  for (std::size_t i = 1; i < u.c.size(); ++i)
    if (u.c[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Engine: per-class cache of commutator series, Lie terms, and the per-weight
// integer solvers used to read a normal form off a series.
// ---------------------------------------------------------------------------

struct WeightSolver {
  std::vector<int> kidx;                      // basis indices of this weight
  std::vector<std::vector<BigInt>> columns;   // Lie term per basis index (len 2^w)
  std::vector<int> pivot_rows;                // one row per column
  std::vector<std::vector<BigRat>> inverse;   // inverse of the pivot submatrix

  // Solve sum_k e_k * columns[k] = target exactly over the integers.
  std::vector<BigInt> solve(const std::vector<BigInt>& target) const {
    const std::size_t n = columns.size();
    std::vector<BigInt> e(n);
    for (std::size_t i = 0; i < n; ++i) {
      BigRat acc = 0;
      for (std::size_t j = 0; j < n; ++j)
        acc += inverse[i][j] * BigRat(target[static_cast<std::size_t>(pivot_rows[j])]);
      if (boost::multiprecision::denominator(acc) != 1)
        throw InternalInconsistency("normal-form solve produced a non-integer exponent");
      e[i] = boost::multiprecision::numerator(acc);
    }
    // full-system verification also rejects vectors outside the lattice
    for (std::size_t row = 0; row < target.size(); ++row) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += e[k] * columns[k][row];
      if (acc != target[row])
        throw InternalInconsistency("normal-form solve failed to reproduce the series");
    }
    return e;
  }
};

struct Engine {
  int gamma;
  const Basis* basis;
  std::vector<Series> cseries;          // per basis index
  std::vector<WeightSolver> solvers;    // per weight (1-based: solvers[w-1])

  explicit Engine(int g) : gamma(g), basis(&Basis::for_class(g, g)) {
    // series of every basic commutator
    for (int k = 0; k < basis->size(); ++k) {
      const BasicCommutator& bc = basis->at(k);
      if (bc.is_generator()) {
        cseries.push_back(series_generator(gamma, k));
      } else {
        const Series& l = cseries[static_cast<std::size_t>(bc.left)];
        const Series& r = cseries[static_cast<std::size_t>(bc.right)];
        cseries.push_back(series_mul(series_mul(series_inverse(l), series_inverse(r)),
                                     series_mul(l, r)));
      }
    }
    // Lie leading terms and solvers, one per weight
    std::vector<std::vector<BigInt>> lie(static_cast<std::size_t>(basis->size()));
    for (int k = 0; k < basis->size(); ++k) {
      const BasicCommutator& bc = basis->at(k);
      if (bc.is_generator()) {
        lie[static_cast<std::size_t>(k)].assign(2, BigInt(0));
        lie[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
        continue;
      }
      const auto& pl = lie[static_cast<std::size_t>(bc.left)];
      const auto& pr = lie[static_cast<std::size_t>(bc.right)];
      const int wl = basis->at(bc.left).weight;
      const int wr = basis->at(bc.right).weight;
      std::vector<BigInt> p(static_cast<std::size_t>(1) << (wl + wr));
      for (int i = 0; i < (1 << wl); ++i) {
        if (pl[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < (1 << wr); ++j) {
          if (pr[static_cast<std::size_t>(j)] == 0) continue;
          const BigInt prod = pl[static_cast<std::size_t>(i)] * pr[static_cast<std::size_t>(j)];
          p[static_cast<std::size_t>((i << wr) | j)] += prod;
          p[static_cast<std::size_t>((j << wl) | i)] -= prod;
        }
      }
      lie[static_cast<std::size_t>(k)] = std::move(p);
    }
    solvers.resize(static_cast<std::size_t>(gamma));
    for (int w = 1; w <= gamma; ++w) {
      WeightSolver& ws = solvers[static_cast<std::size_t>(w - 1)];
      for (int k = 0; k < basis->size(); ++k)
        if (basis->at(k).weight == w) {
          ws.kidx.push_back(k);
          ws.columns.push_back(lie[static_cast<std::size_t>(k)]);
        }
      build_solver(ws, 1 << w);
    }
  }

  static void build_solver(WeightSolver& ws, int rows) {
    const std::size_t n = ws.columns.size();
    // row-reduce a rational working copy to pick one pivot row per column
    std::vector<std::vector<BigRat>> work(static_cast<std::size_t>(rows),
                                          std::vector<BigRat>(n));
    for (std::size_t k = 0; k < n; ++k)
      for (int r = 0; r < rows; ++r)
        work[static_cast<std::size_t>(r)][k] = BigRat(ws.columns[k][static_cast<std::size_t>(r)]);
    std::vector<bool> used(static_cast<std::size_t>(rows), false);
    for (std::size_t col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = 0; r < rows; ++r)
        if (!used[static_cast<std::size_t>(r)] && work[static_cast<std::size_t>(r)][col] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0)
        throw InternalInconsistency("basic commutator Lie terms are not independent");
      used[static_cast<std::size_t>(pivot)] = true;
      ws.pivot_rows.push_back(pivot);
      const BigRat inv = BigRat(1) / work[static_cast<std::size_t>(pivot)][col];
      for (std::size_t j = 0; j < n; ++j) work[static_cast<std::size_t>(pivot)][j] *= inv;
      for (int r = 0; r < rows; ++r) {
        if (r == pivot || work[static_cast<std::size_t>(r)][col] == 0) continue;
        const BigRat f = work[static_cast<std::size_t>(r)][col];
        for (std::size_t j = 0; j < n; ++j)
          work[static_cast<std::size_t>(r)][j] -= f * work[static_cast<std::size_t>(pivot)][j];
      }
    }
    // invert the square pivot submatrix by Gauss-Jordan
    std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        m[i][j] = BigRat(ws.columns[j][static_cast<std::size_t>(ws.pivot_rows[i])]);
      m[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && m[pivot][col] == 0) ++pivot;
      if (pivot == n) throw InternalInconsistency("singular pivot submatrix");
      std::swap(m[col], m[pivot]);
      const BigRat inv = BigRat(1) / m[col][col];
      for (std::size_t j = 0; j < 2 * n; ++j) m[col][j] *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || m[r][col] == 0) continue;
        const BigRat f = m[r][col];
        for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
      }
    }
    ws.inverse.assign(n, std::vector<BigRat>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ws.inverse[i][j] = m[i][n + j];
  }

  NormalWord to_normal(Series u) const {
    NormalWord out;
    out.gamma = gamma;
    out.exponents.assign(static_cast<std::size_t>(basis->size()), BigInt(0));
    for (int w = 1; w <= gamma; ++w) {
      const WeightSolver& ws = solvers[static_cast<std::size_t>(w - 1)];
      std::vector<BigInt> target(static_cast<std::size_t>(1) << w);
      for (std::size_t i = 0; i < target.size(); ++i)
        target[i] = u.c[static_cast<std::size_t>(word_offset(w)) + i];
      const std::vector<BigInt> e = ws.solve(target);
      for (std::size_t t = 0; t < ws.kidx.size(); ++t)
        out.exponents[static_cast<std::size_t>(ws.kidx[t])] = e[t];
      // divide the weight-w block off on the left, highest index first
      for (std::size_t t = ws.kidx.size(); t-- > 0;) {
        if (e[t] == 0) continue;
        u = series_mul(series_pow(cseries[static_cast<std::size_t>(ws.kidx[t])], BigInt(-e[t])), u);
      }
    }
    if (!series_is_one(u))
      throw InternalInconsistency("normal-form extraction left a nontrivial remainder");
    return out;
  }

  Series series_of(const NormalWord& w) const {
    Series u = series_one(gamma);
    for (int k = 0; k < basis->size(); ++k) {
      const BigInt& e = w.exponents[static_cast<std::size_t>(k)];
      if (e == 0) continue;
      u = series_mul(u, series_pow(cseries[static_cast<std::size_t>(k)], e));
    }
    return u;
  }
};

const Engine& engine_for(int gamma, int max_class) {
  check_class(gamma, max_class);
  static std::mutex mtx;
  static std::map<int, std::unique_ptr<Engine>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(gamma);
  if (it == cache.end())
    it = cache.emplace(gamma, std::make_unique<Engine>(gamma)).first;
  return *it->second;
}

}  // namespace

// ---------------------------------------------------------------------------
// Basis
// ---------------------------------------------------------------------------

Basis::Basis(int gamma) : gamma_(gamma) {
  items_.push_back(BasicCommutator{0, 1, -1, -1});
  items_.push_back(BasicCommutator{1, 1, -1, -1});
  for (int w = 2; w <= gamma; ++w) {
    const int upto = static_cast<int>(items_.size());
    for (int i = 0; i < upto; ++i) {
      for (int j = 0; j < i; ++j) {
        if (items_[static_cast<std::size_t>(i)].weight +
                items_[static_cast<std::size_t>(j)].weight != w)
          continue;
        const BasicCommutator& left = items_[static_cast<std::size_t>(i)];
        if (!left.is_generator() && j < left.right) continue;
        items_.push_back(BasicCommutator{static_cast<int>(items_.size()), w, i, j});
      }
    }
  }
}

const Basis& Basis::for_class(int gamma, int max_class) {
  check_class(gamma, max_class);
  static std::mutex mtx;
  static std::map<int, std::unique_ptr<Basis>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(gamma);
  if (it == cache.end())
    it = cache.emplace(gamma, std::unique_ptr<Basis>(new Basis(gamma))).first;
  return *it->second;
}

int Basis::find_pair(int left, int right) const {
  for (const BasicCommutator& bc : items_)
    if (bc.left == left && bc.right == right) return bc.index;
  return -1;
}

std::string Basis::name(int index) const {
  const BasicCommutator& bc = items_[static_cast<std::size_t>(index)];
  if (bc.is_generator()) return index == 0 ? "a" : "b";
  return "[" + name(bc.left) + "," + name(bc.right) + "]";
}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

bool NormalWord::is_identity() const {
  for (const BigInt& e : exponents)
    if (e != 0) return false;
  return true;
}

NormalWord identity_word(int gamma, int max_class) {
  check_class(gamma, max_class);
  NormalWord w;
  w.gamma = gamma;
  w.exponents.assign(static_cast<std::size_t>(Basis::for_class(gamma, max_class).size()),
                     BigInt(0));
  return w;
}

NormalWord collect(std::span<const SignedLetter> word, int gamma, int max_class) {
  const Engine& eng = engine_for(gamma, max_class);
  Series u = series_one(gamma);
  for (const SignedLetter& letter : word) {
    if (letter.index < 0 || letter.index >= eng.basis->size())
      throw DomainError("collect: letter index outside the class-" +
                        std::to_string(gamma) + " basis");
    u = series_mul(u, series_pow(eng.cseries[static_cast<std::size_t>(letter.index)],
                                 BigInt(letter.exponent)));
  }
  return eng.to_normal(std::move(u));
}

NormalWord multiply(const NormalWord& x, const NormalWord& y) {
  if (x.gamma != y.gamma)
    throw DomainError("NormalWord multiply: mismatched classes");
  const Engine& eng = engine_for(x.gamma, x.gamma);
  return eng.to_normal(series_mul(eng.series_of(x), eng.series_of(y)));
}

NormalWord inverse(const NormalWord& x) {
  const Engine& eng = engine_for(x.gamma, x.gamma);
  return eng.to_normal(series_inverse(eng.series_of(x)));
}

// ---------------------------------------------------------------------------
// Hall polynomials
// ---------------------------------------------------------------------------

BigInt BinomialPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t l = 0; l < lambda.size(); ++l)
    acc += lambda[l] * binomial(x, static_cast<int>(l) + 1);
  return acc;
}

namespace {

NormalWord collect_ab_power(int gamma, std::int64_t n) {
  std::vector<SignedLetter> word;
  word.reserve(static_cast<std::size_t>(2 * n));
  for (std::int64_t i = 0; i < n; ++i) {
    word.push_back(SignedLetter{0, 1});
    word.push_back(SignedLetter{1, 1});
  }
  return collect(word, gamma, gamma);
}

HallPolynomials build_hall_polynomials(int gamma) {
  const Basis& basis = Basis::for_class(gamma, gamma);
  const int revalidate_to = gamma + 6;
  std::vector<NormalWord> powers;
  for (int n = 0; n <= revalidate_to; ++n)
    powers.push_back(collect_ab_power(gamma, n));

  HallPolynomials hp;
  hp.gamma = gamma;
  hp.f.resize(static_cast<std::size_t>(basis.size()));
  for (int k = 2; k < basis.size(); ++k) {
    const int w = basis.at(k).weight;
    // forward differences give the binomial-basis coefficients directly
    std::vector<BigInt> values;
    for (int n = 0; n <= w; ++n)
      values.push_back(powers[static_cast<std::size_t>(n)].exponents[static_cast<std::size_t>(k)]);
    if (values[0] != 0)
      throw TheoremViolation("hall_polynomials: f_k(0) != 0");
    if (values.size() > 1 && values[1] != 0)
      throw TheoremViolation("hall_polynomials: f_k(1) != 0");
    BinomialPolynomial poly;
    for (int l = 1; l <= w; ++l) {
      BigInt diff = 0;
      for (int i = 0; i <= l; ++i) {
        const BigInt term = binomial(BigInt(l), i) * values[static_cast<std::size_t>(i)];
        diff += ((l - i) % 2 == 0) ? term : -term;
      }
      poly.lambda.push_back(diff);
    }
    hp.f[static_cast<std::size_t>(k)] = std::move(poly);
  }

  // every collected power of ab must match the interpolated polynomials
  for (int n = 0; n <= revalidate_to; ++n) {
    const NormalWord& nw = powers[static_cast<std::size_t>(n)];
    if (nw.exponents[0] != n || nw.exponents[1] != n)
      throw TheoremViolation("hall_polynomials: generator exponents of (ab)^n are not n");
    for (int k = 2; k < basis.size(); ++k)
      if (nw.exponents[static_cast<std::size_t>(k)] != hp.f[static_cast<std::size_t>(k)](n))
        throw TheoremViolation("hall_polynomials: f_" + std::to_string(k) +
                               " disagrees with collection at n=" + std::to_string(n));
  }
  return hp;
}

}  // namespace

const HallPolynomials& hall_polynomials(int gamma, int max_class) {
  check_class(gamma, max_class);
  static std::mutex mtx;
  static std::map<int, std::unique_ptr<HallPolynomials>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(gamma);
  if (it == cache.end())
    it = cache.emplace(gamma,
                       std::make_unique<HallPolynomials>(build_hall_polynomials(gamma)))
             .first;
  return *it->second;
}

// ---------------------------------------------------------------------------
// Formal counts and the class constants
// ---------------------------------------------------------------------------

FormalCount formal_commutator_count(int gamma) {
  if (gamma < 1) throw DomainError("formal_commutator_count: gamma must be >= 1");
  FormalCount fc;
  fc.per_weight.assign(static_cast<std::size_t>(gamma), 0);
  fc.per_weight[0] = 2;
  for (int w = 2; w <= gamma; ++w) {
    std::int64_t total = 0;
    for (int i = 1; i < w; ++i)
      total += fc.per_weight[static_cast<std::size_t>(i - 1)] *
               fc.per_weight[static_cast<std::size_t>(w - i - 1)];
    fc.per_weight[static_cast<std::size_t>(w - 1)] = total;
  }
  std::int64_t sum = 0;
  for (std::int64_t n : fc.per_weight) sum += n;
  fc.r_formal = sum - 1;
  return fc;
}

std::int64_t formal_index_of(int gamma, int k, int max_class) {
  const Basis& basis = Basis::for_class(gamma, max_class);
  if (k < 0 || k >= basis.size())
    throw DomainError("formal_index_of: index outside the basis");
  const FormalCount fc = formal_commutator_count(gamma);
  auto count_of_weight = [&fc](int w) {
    return fc.per_weight[static_cast<std::size_t>(w - 1)];
  };
  auto offset_of_weight = [&fc](int w) {
    std::int64_t off = 0;
    for (int i = 1; i < w; ++i) off += fc.per_weight[static_cast<std::size_t>(i - 1)];
    return off;
  };
  // formal ordering within a weight class: by left weight, then left
  // position, then right position
  std::vector<std::int64_t> pos(static_cast<std::size_t>(basis.size()));
  for (int i = 0; i < basis.size(); ++i) {
    const BasicCommutator& bc = basis.at(i);
    if (bc.is_generator()) {
      pos[static_cast<std::size_t>(i)] = i;
      continue;
    }
    const int wl = basis.at(bc.left).weight;
    const int wr = basis.at(bc.right).weight;
    std::int64_t within = 0;
    for (int w1 = 1; w1 < wl; ++w1) within += count_of_weight(w1) * count_of_weight(bc.weight - w1);
    const std::int64_t left_within = pos[static_cast<std::size_t>(bc.left)] - offset_of_weight(wl);
    const std::int64_t right_within = pos[static_cast<std::size_t>(bc.right)] - offset_of_weight(wr);
    within += left_within * count_of_weight(wr) + right_within;
    pos[static_cast<std::size_t>(i)] = offset_of_weight(bc.weight) + within;
  }
  return pos[static_cast<std::size_t>(k)];
}

bool divisibility_check(int gamma, const BigInt& X, int max_class) {
  check_class(gamma, max_class);
  BigInt fact = 1;
  for (int i = 2; i <= gamma; ++i) fact *= i;
  if (X % fact != 0)
    throw DomainError("divisibility_check: gamma! must divide X");
  const BigInt q = X / fact;
  const HallPolynomials& hp = hall_polynomials(gamma, max_class);
  for (int k = 2; k < static_cast<int>(hp.f.size()); ++k)
    if (hp.f[static_cast<std::size_t>(k)](X) % q != 0) return false;
  return true;
}

ClassConstants class_constants(int gamma, int max_class) {
  check_class(gamma, max_class);
  auto a_of = [](int g) {
    if (g == 1) return BigInt(1);
    BigInt fact = 1;
    for (int i = 2; i <= g; ++i) fact *= i;
    return pow_big(fact, formal_commutator_count(g).r_formal - 2);
  };
  ClassConstants cc;
  cc.gamma = gamma;
  cc.r_formal = formal_commutator_count(gamma).r_formal;
  cc.A = a_of(gamma);
  BigInt fact = 1;
  for (int i = 2; i <= gamma; ++i) fact *= i;
  cc.B_prime = 1;
  cc.C_prime = 1;
  BigInt partial_fact = 1;
  for (int i = 2; i <= gamma; ++i) {
    const BigInt ai = a_of(i);
    cc.B_prime *= ai;
    cc.C_prime *= ai * partial_fact;  // partial_fact = (i-1)!
    partial_fact *= i;
  }
  cc.B = fact * cc.B_prime;
  cc.C = fact * cc.C_prime;
  if (!prime_factors_at_most(cc.A, gamma) || !prime_factors_at_most(cc.B, gamma) ||
      !prime_factors_at_most(cc.C, gamma))
    throw TheoremViolation("class_constants: a prime factor exceeds the class");
  return cc;
}

}  // namespace ordcalc::hall

#pragma once

// Test-only helpers: builders, random generators, and brute-force oracles
// that share no code with the library paths they check.

#include <henselift/integer.hpp>
#include <henselift/poly.hpp>
#include <henselift/problem.hpp>
#include <henselift/ring.hpp>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace henselift::testing {

/// Monic polynomial from its lower coefficients, low to high.
inline MonicPoly poly(std::initializer_list<long> lower) {
  std::vector<Integer> c;
  for (long x : lower) c.emplace_back(x);
  return MonicPoly(std::move(c));
}

/// Problem file from the data directory.
inline ProblemSpec fixture(const std::string& name) {
  return load_problem(std::string(HENSELIFT_DATA_DIR) + "/" + name);
}

inline std::vector<MonicPoly> fixture_factors(const std::string& name) {
  std::vector<MonicPoly> gs;
  for (const auto& c : fixture(name).factors) gs.push_back(MonicPoly::from_dense(c));
  return gs;
}

inline Integer big(const char* decimal) { return Integer(decimal); }

inline IntMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto m = static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix a(n, m);
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long x : r) a(i, j++) = x;
    ++i;
  }
  return a;
}

inline IntRowVector row(std::initializer_list<long> xs) {
  IntRowVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index j = 0;
  for (long x : xs) v(j++) = x;
  return v;
}

/// Valuation by repeated exact division; UINT64_MAX stands for infinity.
inline std::uint64_t val_by_division(Integer x, unsigned long p) {
  if (x == 0) return UINT64_MAX;
  std::uint64_t v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

inline Integer pow_int(unsigned long p, unsigned long n) {
  Integer r = 1;
  for (unsigned long i = 0; i < n; ++i) r *= p;
  return r;
}

/// Leibniz expansion over all permutations. Only for k <= 7.
inline Integer leibniz_det(const IntMatrix& a) {
  const int k = static_cast<int>(a.rows());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Integer det = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < k && term != 0; ++i) term *= a(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Exponents of the elementary divisors from determinantal divisors:
/// e_i = val(gcd of i x i minors) - val(gcd of (i-1) x (i-1) minors).
inline std::vector<std::uint64_t> divisor_exponents_by_minors(const IntMatrix& a, unsigned long p) {
  const int k = static_cast<int>(a.rows());
  std::vector<std::uint64_t> dv(k + 1, 0);
  for (int size = 1; size <= k; ++size) {
    std::vector<bool> rsel(k, false), csel(k, false);
    std::fill(rsel.begin(), rsel.begin() + size, true);
    Integer g = 0;
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + size, true);
      do {
        IntMatrix sub(size, size);
        int ri = 0;
        for (int r = 0; r < k; ++r) {
          if (!rsel[r]) continue;
          int ci = 0;
          for (int c = 0; c < k; ++c)
            if (csel[c]) sub(ri, ci++) = a(r, c);
          ++ri;
        }
        Integer m = leibniz_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    dv[size] = val_by_division(g, p);
  }
  std::vector<std::uint64_t> e(k);
  for (int i = 1; i <= k; ++i) e[i - 1] = dv[i] - dv[i - 1];
  return e;
}

/// Schoolbook product written independently of the library's convolve.
inline std::vector<Integer> naive_product(const std::vector<std::vector<Integer>>& ps) {
  std::vector<Integer> acc = {Integer(1)};
  for (const auto& p : ps) {
    std::vector<Integer> next(acc.size() + p.size() - 1, Integer(0));
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) next[i + j] += acc[i] * p[j];
    acc = std::move(next);
  }
  return acc;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  std::uint64_t pick(std::initializer_list<std::uint64_t> xs) {
    return *(xs.begin() + index(0, xs.size() - 1));
  }

  MonicPoly monic(std::size_t degree, long bound) {
    std::vector<Integer> c(degree);
    for (auto& x : c) x = uniform(-bound, bound);
    return MonicPoly(std::move(c));
  }

  /// Monic with every lower coefficient divisible by p.
  MonicPoly monic_monomial_mod_p(std::size_t degree, long bound, unsigned long p) {
    std::vector<Integer> c(degree);
    for (auto& x : c) x = Integer(uniform(-bound, bound)) * p;
    return MonicPoly(std::move(c));
  }

  IntPoly lower_noise(std::size_t degree, long bound) {
    IntPoly c(degree);
    for (auto& x : c) x = uniform(-bound, bound);
    return c;
  }

  IntMatrix matrix(int k, long bound) {
    IntMatrix a(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a(i, j) = uniform(-bound, bound);
    return a;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline MonicPoly add_scaled(const MonicPoly& g, const Integer& scale, const IntPoly& noise) {
  std::vector<Integer> c(g.lower().begin(), g.lower().end());
  for (std::size_t i = 0; i < c.size() && i < noise.size(); ++i) c[i] += scale * noise[i];
  return MonicPoly(std::move(c));
}

}  // namespace henselift::testing

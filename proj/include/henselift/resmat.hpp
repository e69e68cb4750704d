#pragma once

// The n-ary resultant matrix A(g_1, ..., g_n), its determinant, and the
// valuation data t, t' and column exponents d_i that drive the lifting step.

#include <henselift/integer.hpp>
#include <henselift/poly.hpp>
#include <henselift/ring.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace henselift {

/// Block k holds m_k rows; row j of block k is the coefficient vector of
/// prod_{l != k} g_l shifted right by j columns.
struct ResultantMatrix {
  IntMatrix entries;
  std::vector<std::size_t> degrees;    // m_1..m_n
  std::vector<IntPoly> omitted;        // dense prod_{l != k} g_l per block
  std::vector<std::size_t> block_start;

  std::size_t size() const { return static_cast<std::size_t>(entries.rows()); }
};

/// Throws Errc::EmptyFactorList or Errc::DegreeZeroFactor.
ResultantMatrix build_matrix(std::span<const MonicPoly> gs);

/// Fraction-free (Bareiss) determinant of a square matrix over an integral
/// scalar type. Every division is exact.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(input.rows() == input.cols());
  Matrix<Scalar> a = input;
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return Scalar(0);
      a.row(k).swap(a.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = num / prev;
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// det A(g_1, ..., g_n).
Integer resultant(std::span<const MonicPoly> gs);

/// d_i = (n-1) - max{ j in [0, n-1] : m_1 + ... + m_j <= i - 1 } for
/// i = 1..M, from an ascending degree sequence. Non-increasing.
std::vector<std::uint64_t> column_exponents(std::span<const std::size_t> sorted_degrees);

/// t - sum_{j=1}^{n-1} ((n - j) m_j - 1), degrees ascending.
std::int64_t reduced_valuation(std::uint64_t t, std::span<const std::size_t> sorted_degrees);

struct ResultantProfile {
  // Exact resultant when it was computed; lifted systems only certify t.
  std::optional<Integer> res;
  std::uint64_t t = 0;
  bool special = false;
  // Set only for special profiles; equals e' of the column-divisibility
  // bound.
  std::optional<std::int64_t> t_prime;
  std::vector<std::uint64_t> d;
  std::vector<std::size_t> degrees;

  /// t' in special mode, t otherwise.
  std::uint64_t defect_bound() const {
    return special ? static_cast<std::uint64_t>(*t_prime) : t;
  }
  std::optional<std::int64_t> e_prime() const { return t_prime; }
};

/// Throws Errc::ZeroResultant, and Errc::NotSpecialForm when `special` is
/// requested but the degrees are not ascending or some g_k is not
/// congruent to X^{m_k} mod p.
ResultantProfile profile(std::span<const MonicPoly> gs, const PadicContext& ctx, bool special);

/// Same as profile() but with a resultant that is already known.
ResultantProfile profile_from_resultant(std::span<const MonicPoly> gs, Integer res,
                                        const PadicContext& ctx, bool special);

/// Profile for factors whose resultant valuation t is known by other means.
ResultantProfile profile_from_valuation(std::span<const MonicPoly> gs, std::uint64_t t,
                                        const PadicContext& ctx, bool special);

}  // namespace henselift

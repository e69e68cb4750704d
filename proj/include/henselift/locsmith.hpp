#pragma once

// Smith normal form over Z/p^K with p-power elementary divisors, and row
// systems x A = y solved through it.

#include <henselift/integer.hpp>
#include <henselift/ring.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace henselift {

/// How smith_p chooses among entries of equal minimal valuation.
enum class PivotRule {
  /// First hit scanning rows top to bottom, columns left to right.
  RowMajor,
  /// First hit scanning columns right to left, rows bottom to top.
  ReverseColumnMajor,
};

/// S A T ≡ diag(p^{e_1}, ..., p^{e_k}) mod p^K with S, T invertible over Z_p.
struct SmithDecomposition {
  std::vector<std::uint64_t> exponents;  // e_1 <= ... <= e_k
  IntMatrix S;
  IntMatrix T;
  std::uint64_t modulus_exponent = 0;    // K

  std::uint64_t total() const;
  std::uint64_t largest() const { return exponents.empty() ? 0 : exponents.back(); }
};

/// Throws Errc::SingularMatrix if det A = 0 and Errc::PrecisionTooLow if
/// K <= val_p(det A).
SmithDecomposition smith_p(const IntMatrix& A, std::uint64_t K, const PadicContext& ctx,
                           PivotRule rule = PivotRule::RowMajor);

struct SolveOptions {
  PivotRule pivot = PivotRule::RowMajor;
  /// val_p(det A) when the caller already knows it; computed otherwise.
  std::optional<std::uint64_t> det_valuation;
  /// Modulus exponent W of the Smith form, K + e + 1 when unset. With
  /// W = K the solution is only determined modulo p^{K - e}, and the
  /// remaining digits depend on the pivot rule.
  std::optional<std::uint64_t> working_exponent;
};

/// Returns x, reduced into [0, p^K), with x A ≡ y mod p^K.
///
/// Every entry of y must have valuation >= bound, and bound must cover the
/// largest elementary divisor (bound >= val_p(det A) always does; so does
/// e' when the columns of A satisfy the divisibility hypothesis). By default
/// the Smith form is taken modulo p^{K + e + 1}, e = val_p(det A): the
/// divisions by p^{e_i} consume at most e digits. Throws
/// Errc::InsufficientValuation, Errc::SingularMatrix, and
/// Errc::InvalidArgument for a working exponent below K.
IntRowVector solve_row(const IntMatrix& A, const IntRowVector& y, const PadicContext& ctx,
                       std::uint64_t bound, std::uint64_t K, const SolveOptions& options = {});

/// e' = val_p(det A) - (d_2 + ... + d_k).
std::int64_t column_bound(std::uint64_t det_valuation, std::span<const std::uint64_t> d);

/// True iff p^{d_i} divides every entry of column i.
bool columns_divisible(const IntMatrix& A, std::span<const std::uint64_t> d, const PadicContext& ctx);

/// Checks the valuation-shift bound: given x A ≡ 0 mod p^u, every entry of x
/// has valuation >= u - e, where e = val_p(det A), or e' when column
/// exponents d are given. Throws Errc::HypothesisViolated if x A is not
/// divisible by p^u, if u is below the bound, or if d does not divide the
/// columns.
bool valuation_shift_bound(const IntMatrix& A, const IntRowVector& x, std::uint64_t u,
                           const PadicContext& ctx, std::span<const std::uint64_t> d = {});

/// Elementwise reduction into [0, p^K).
template <typename Derived>
IntMatrix reduce_mod(const Eigen::MatrixBase<Derived>& m, const Integer& modulus) {
  IntMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      mpz_fdiv_r(r(i, j).get_mpz_t(), Integer(m(i, j)).get_mpz_t(), modulus.get_mpz_t());
  return r;
}

}  // namespace henselift

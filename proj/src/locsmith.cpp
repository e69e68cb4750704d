#include <henselift/error.hpp>
#include <henselift/locsmith.hpp>
#include <henselift/resmat.hpp>

#include <numeric>

namespace henselift {

std::uint64_t SmithDecomposition::total() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint64_t{0});
}

namespace {

using Index = Eigen::Index;

struct Pivot {
  Index row = -1;
  Index col = -1;
  Valuation v;
};

Pivot find_pivot(const IntMatrix& B, Index start, const PadicContext& ctx, PivotRule rule) {
  const Index k = B.rows();
  Pivot best;
  auto consider = [&](Index r, Index c) {
    Valuation v = valuation(B(r, c), ctx);
    if (v.is_finite() && (best.row < 0 || v < best.v)) best = {r, c, v};
  };
  if (rule == PivotRule::RowMajor) {
    for (Index r = start; r < k; ++r)
      for (Index c = start; c < k; ++c) consider(r, c);
  } else {
    for (Index c = k; c-- > start;)
      for (Index r = k; r-- > start;) consider(r, c);
  }
  return best;
}

void reduce_in_place(Integer& x, const Integer& mod) {
  mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
}

[[noreturn]] void throw_degenerate(const IntMatrix& A, std::uint64_t K) {
  if (bareiss_determinant(A) == 0) throw Error(Errc::SingularMatrix, "det A = 0");
  throw Error(Errc::PrecisionTooLow,
              "elementary divisors not separable modulo p^" + std::to_string(K));
}

}  // namespace

SmithDecomposition smith_p(const IntMatrix& A, std::uint64_t K, const PadicContext& ctx,
                           PivotRule rule) {
  if (A.rows() != A.cols()) throw Error(Errc::InvalidArgument, "matrix must be square");
  const Index k = A.rows();
  const Integer mod = ctx.power(K);

  IntMatrix B = reduce_mod(A, mod);
  SmithDecomposition dec;
  dec.modulus_exponent = K;
  dec.S = IntMatrix::Identity(k, k);
  dec.T = IntMatrix::Identity(k, k);

  for (Index i = 0; i < k; ++i) {
    const Pivot piv = find_pivot(B, i, ctx, rule);
    if (piv.row < 0) throw_degenerate(A, K);
    if (piv.row != i) {
      B.row(i).swap(B.row(piv.row));
      dec.S.row(i).swap(dec.S.row(piv.row));
    }
    if (piv.col != i) {
      B.col(i).swap(B.col(piv.col));
      dec.T.col(i).swap(dec.T.col(piv.col));
    }
    const std::uint64_t v = piv.v.value();
    const Integer pv = ctx.power(v);

    // Normalize the pivot to exactly p^v.
    Integer unit;
    mpz_divexact(unit.get_mpz_t(), B(i, i).get_mpz_t(), pv.get_mpz_t());
    Integer uinv;
    mpz_invert(uinv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
    for (Index c = 0; c < k; ++c) {
      B(i, c) *= uinv;
      reduce_in_place(B(i, c), mod);
      dec.S(i, c) *= uinv;
      reduce_in_place(dec.S(i, c), mod);
    }

    Integer q;
    for (Index r = i + 1; r < k; ++r) {
      if (B(r, i) == 0) continue;
      mpz_divexact(q.get_mpz_t(), B(r, i).get_mpz_t(), pv.get_mpz_t());
      for (Index c = 0; c < k; ++c) {
        B(r, c) -= q * B(i, c);
        reduce_in_place(B(r, c), mod);
        dec.S(r, c) -= q * dec.S(i, c);
        reduce_in_place(dec.S(r, c), mod);
      }
    }
    for (Index c = i + 1; c < k; ++c) {
      if (B(i, c) == 0) continue;
      mpz_divexact(q.get_mpz_t(), B(i, c).get_mpz_t(), pv.get_mpz_t());
      for (Index r = 0; r < k; ++r) {
        B(r, c) -= q * B(r, i);
        reduce_in_place(B(r, c), mod);
        dec.T(r, c) -= q * dec.T(r, i);
        reduce_in_place(dec.T(r, c), mod);
      }
    }
    dec.exponents.push_back(v);
  }
  if (dec.total() >= K) throw_degenerate(A, K);
  return dec;
}

IntRowVector solve_row(const IntMatrix& A, const IntRowVector& y, const PadicContext& ctx,
                       std::uint64_t bound, std::uint64_t K, const SolveOptions& options) {
  if (A.rows() != A.cols() || y.cols() != A.rows())
    throw Error(Errc::InvalidArgument, "dimension mismatch in x A = y");
  const Index k = A.rows();
  for (Index i = 0; i < k; ++i)
    if (valuation(y(i), ctx) < bound)
      throw Error(Errc::InsufficientValuation,
                  "y[" + std::to_string(i) + "] has valuation below " + std::to_string(bound));

  std::uint64_t e = 0;
  if (options.det_valuation) {
    e = *options.det_valuation;
  } else {
    const Integer det = bareiss_determinant(A);
    if (det == 0) throw Error(Errc::SingularMatrix, "det A = 0");
    e = valuation(det, ctx).value();
  }
  const std::uint64_t W = options.working_exponent.value_or(K + e + 1);
  if (W < K) throw Error(Errc::InvalidArgument, "working exponent below K");
  const SmithDecomposition dec = smith_p(A, W, ctx, options.pivot);
  if (dec.total() != e)
    throw Error(Errc::InvariantViolation, "elementary divisors sum to " + std::to_string(dec.total()) +
                                              ", expected val(det) = " + std::to_string(e));
  const Integer modW = ctx.power(W);

  // x S^{-1} D = y T, so x = (y T D^{-1}) S.
  IntRowVector z = reduce_mod(y * dec.T, modW);
  IntRowVector w(k);
  for (Index i = 0; i < k; ++i) {
    const std::uint64_t ei = dec.exponents[static_cast<std::size_t>(i)];
    if (valuation(z(i), ctx) < ei)
      throw Error(Errc::InsufficientValuation,
                  "bound " + std::to_string(bound) + " is below elementary divisor exponent " +
                      std::to_string(ei));
    w(i) = divide_by_power(z(i), ei, ctx);
  }
  return reduce_mod(w * dec.S, ctx.power(K));
}

std::int64_t column_bound(std::uint64_t det_valuation, std::span<const std::uint64_t> d) {
  std::int64_t e = static_cast<std::int64_t>(det_valuation);
  for (std::size_t i = 1; i < d.size(); ++i) e -= static_cast<std::int64_t>(d[i]);
  return e;
}

bool columns_divisible(const IntMatrix& A, std::span<const std::uint64_t> d, const PadicContext& ctx) {
  if (static_cast<Index>(d.size()) != A.cols()) return false;
  for (Index c = 0; c < A.cols(); ++c)
    for (Index r = 0; r < A.rows(); ++r)
      if (valuation(A(r, c), ctx) < d[static_cast<std::size_t>(c)]) return false;
  return true;
}

bool valuation_shift_bound(const IntMatrix& A, const IntRowVector& x, std::uint64_t u,
                           const PadicContext& ctx, std::span<const std::uint64_t> d) {
  const Integer det = bareiss_determinant(A);
  if (det == 0) throw Error(Errc::SingularMatrix, "det A = 0");
  const std::uint64_t e = valuation(det, ctx).value();
  std::int64_t bound = static_cast<std::int64_t>(e);
  if (!d.empty()) {
    if (!columns_divisible(A, d, ctx))
      throw Error(Errc::HypothesisViolated, "column exponents do not divide the columns of A");
    bound = column_bound(e, d);
  }
  if (static_cast<std::int64_t>(u) < bound)
    throw Error(Errc::HypothesisViolated,
                "u = " + std::to_string(u) + " is below the bound " + std::to_string(bound));
  const IntRowVector xa = x * A;
  for (Index i = 0; i < xa.cols(); ++i)
    if (valuation(xa(i), ctx) < u)
      throw Error(Errc::HypothesisViolated, "x A is not divisible by p^" + std::to_string(u));
  const auto floor = static_cast<std::uint64_t>(static_cast<std::int64_t>(u) - bound);
  for (Index i = 0; i < x.cols(); ++i)
    if (valuation(x(i), ctx) < floor) return false;
  return true;
}

}  // namespace henselift

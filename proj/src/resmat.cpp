#include <henselift/error.hpp>
#include <henselift/resmat.hpp>

#include <algorithm>

namespace henselift {

ResultantMatrix build_matrix(std::span<const MonicPoly> gs) {
  if (gs.empty()) throw Error(Errc::EmptyFactorList, "no factors");
  ResultantMatrix A;
  std::size_t M = 0;
  for (std::size_t k = 0; k < gs.size(); ++k) {
    if (gs[k].degree() == 0)
      throw Error(Errc::DegreeZeroFactor, "factor " + std::to_string(k) + " has degree 0");
    A.degrees.push_back(gs[k].degree());
    A.block_start.push_back(M);
    M += gs[k].degree();
  }
  A.entries = IntMatrix::Zero(static_cast<Eigen::Index>(M), static_cast<Eigen::Index>(M));
  for (std::size_t k = 0; k < gs.size(); ++k) {
    IntPoly a = omit_product(gs, k).dense();
    for (std::size_t j = 0; j < A.degrees[k]; ++j) {
      const auto row = static_cast<Eigen::Index>(A.block_start[k] + j);
      for (std::size_t i = 0; i < a.size(); ++i) A.entries(row, static_cast<Eigen::Index>(j + i)) = a[i];
    }
    A.omitted.push_back(std::move(a));
  }
  return A;
}

Integer resultant(std::span<const MonicPoly> gs) {
  return bareiss_determinant(build_matrix(gs).entries);
}

std::vector<std::uint64_t> column_exponents(std::span<const std::size_t> sorted_degrees) {
  const std::size_t n = sorted_degrees.size();
  std::size_t M = 0;
  for (auto m : sorted_degrees) M += m;
  std::vector<std::uint64_t> d(M);
  for (std::size_t i = 1; i <= M; ++i) {
    std::size_t j = 0;
    std::size_t partial = 0;
    while (j + 1 <= n - 1 && partial + sorted_degrees[j] <= i - 1) {
      partial += sorted_degrees[j];
      ++j;
    }
    d[i - 1] = (n - 1) - j;
  }
  return d;
}

std::int64_t reduced_valuation(std::uint64_t t, std::span<const std::size_t> sorted_degrees) {
  const auto n = static_cast<std::int64_t>(sorted_degrees.size());
  std::int64_t sum = 0;
  for (std::int64_t j = 1; j <= n - 1; ++j)
    sum += (n - j) * static_cast<std::int64_t>(sorted_degrees[j - 1]) - 1;
  return static_cast<std::int64_t>(t) - sum;
}

ResultantProfile profile_from_resultant(std::span<const MonicPoly> gs, Integer res,
                                        const PadicContext& ctx, bool special) {
  if (res == 0) throw Error(Errc::ZeroResultant, "resultant of the factors is 0");
  const std::uint64_t t = valuation(res, ctx).value();
  ResultantProfile prof = profile_from_valuation(gs, t, ctx, special);
  prof.res = std::move(res);
  return prof;
}

ResultantProfile profile_from_valuation(std::span<const MonicPoly> gs, std::uint64_t t,
                                        const PadicContext& ctx, bool special) {
  ResultantProfile prof;
  prof.t = t;
  for (const auto& g : gs) prof.degrees.push_back(g.degree());
  prof.special = special;
  if (!special) return prof;

  if (!std::is_sorted(prof.degrees.begin(), prof.degrees.end()))
    throw Error(Errc::NotSpecialForm, "factor degrees are not ascending");
  for (std::size_t k = 0; k < gs.size(); ++k)
    if (!is_monomial_mod_p(gs[k], ctx))
      throw Error(Errc::NotSpecialForm,
                  "factor " + std::to_string(k) + " is not congruent to X^" +
                      std::to_string(gs[k].degree()) + " mod p");
  prof.t_prime = reduced_valuation(prof.t, prof.degrees);
  prof.d = column_exponents(prof.degrees);
  if (*prof.t_prime < 0)
    throw Error(Errc::InvariantViolation, "negative t' = " + std::to_string(*prof.t_prime));
  return prof;
}

ResultantProfile profile(std::span<const MonicPoly> gs, const PadicContext& ctx, bool special) {
  return profile_from_resultant(gs, resultant(gs), ctx, special);
}

}  // namespace henselift

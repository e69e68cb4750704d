#include <henselift/error.hpp>
#include <henselift/poly.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <utility>

namespace henselift {

MonicPoly MonicPoly::from_dense(const IntPoly& dense) {
  if (dense.empty() || dense.back() != 1)
    throw Error(Errc::InvalidArgument, "leading coefficient must be 1");
  return MonicPoly(std::vector<Integer>(dense.begin(), dense.end() - 1));
}

Integer MonicPoly::coeff(std::size_t i) const {
  if (i < lower_.size()) return lower_[i];
  return i == lower_.size() ? Integer(1) : Integer(0);
}

IntPoly MonicPoly::dense() const {
  IntPoly d(lower_.begin(), lower_.end());
  d.emplace_back(1);
  return d;
}

MonicPoly operator*(const MonicPoly& a, const MonicPoly& b) {
  const IntPoly da = a.dense();
  const IntPoly db = b.dense();
  IntPoly c = convolve<Integer>(da, db);
  c.pop_back();
  return MonicPoly(std::move(c));
}

MonicPoly product(std::span<const MonicPoly> ps) {
  MonicPoly r;
  for (const auto& p : ps) r = r * p;
  return r;
}

MonicPoly omit_product(std::span<const MonicPoly> ps, std::size_t k) {
  if (k >= ps.size())
    throw Error(Errc::IndexOutOfRange,
                "factor index " + std::to_string(k) + " of " + std::to_string(ps.size()));
  MonicPoly r;
  for (std::size_t j = 0; j < ps.size(); ++j)
    if (j != k) r = r * ps[j];
  return r;
}

IntPoly subtract(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Valuation content_valuation(const IntPoly& a, const PadicContext& ctx) {
  Valuation v = Valuation::infinite();
  for (const auto& c : a) v = std::min(v, valuation(c, ctx));
  return v;
}

bool congruent_mod(const IntPoly& a, const IntPoly& b, std::uint64_t r, const PadicContext& ctx) {
  return content_valuation(subtract(a, b), ctx) >= r;
}

bool congruent_mod(const MonicPoly& a, const MonicPoly& b, std::uint64_t r, const PadicContext& ctx) {
  return congruent_mod(a.dense(), b.dense(), r, ctx);
}

bool is_monomial_mod_p(const MonicPoly& a, const PadicContext& ctx) {
  return content_valuation(IntPoly(a.lower().begin(), a.lower().end()), ctx) >= 1;
}

IntPoly derivative(const MonicPoly& f) {
  const std::size_t m = f.degree();
  IntPoly d(m, Integer(0));
  for (std::size_t i = 1; i <= m; ++i) d[i - 1] = f.coeff(i) * static_cast<unsigned long>(i);
  return d;
}

namespace {

std::size_t effective_degree(const IntPoly& h) {
  std::size_t n = h.size();
  while (n > 0 && h[n - 1] == 0) --n;
  return n == 0 ? 0 : n - 1;
}

// Gaussian elimination over the rationals. Kept separate from the
// fraction-free determinant in resmat so the two resultant routes share no
// code.
Integer rational_determinant(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      mpq_class q = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= q * a[col][c];
    }
  }
  return Integer(det.get_num() / det.get_den());
}

}  // namespace

Integer sylvester_resultant(const MonicPoly& g, const IntPoly& h) {
  const std::size_t m = g.degree();
  const std::size_t k = effective_degree(h);
  if (m == 0 || k == 0) throw Error(Errc::DegreeZero, "Sylvester resultant needs positive degrees");
  const IntPoly gd = g.dense();
  // Classical layout: k rows of g and m rows of h, coefficients high to low.
  const std::size_t n = m + k;
  std::vector<std::vector<mpq_class>> s(n, std::vector<mpq_class>(n, 0));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = gd[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= k; ++i) s[k + r][r + i] = h[k - i];
  return rational_determinant(std::move(s));
}

Integer sylvester_resultant(const MonicPoly& g, const MonicPoly& h) {
  return sylvester_resultant(g, h.dense());
}

Integer discriminant(const MonicPoly& f) {
  const std::size_t m = f.degree();
  if (m == 0) throw Error(Errc::DegreeZero, "discriminant of a constant");
  if (m == 1) return 1;
  Integer r = sylvester_resultant(f, derivative(f));
  if ((m * (m - 1) / 2) % 2 == 1) r = -r;
  return r;
}

std::string to_string(const MonicPoly& f) {
  const std::size_t m = f.degree();
  auto monomial = [](std::size_t i) -> std::string {
    if (i == 0) return "";
    if (i == 1) return "X";
    return "X^" + std::to_string(i);
  };
  std::string out = m == 0 ? "1" : monomial(m);
  for (std::size_t i = m; i-- > 0;) {
    const Integer& c = f.lower()[i];
    if (c == 0) continue;
    Integer a = abs(c);
    out += sgn(c) < 0 ? " - " : " + ";
    if (i == 0) {
      out += henselift::to_string(a);
    } else {
      if (a != 1) out += henselift::to_string(a) + "*";
      out += monomial(i);
    }
  }
  return out;
}

}  // namespace henselift

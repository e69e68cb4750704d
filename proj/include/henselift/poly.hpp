#pragma once

// Monic integer polynomials, congruences modulo p^r, the Sylvester
// resultant and the discriminant.

#include <henselift/integer.hpp>
#include <henselift/ring.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace henselift {

/// Dense integer polynomial, coefficients low to high. Trailing zeros allowed.
using IntPoly = std::vector<Integer>;

/// Schoolbook product of two dense coefficient sequences.
template <typename Scalar>
std::vector<Scalar> convolve(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Scalar> r(a.size() + b.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// Monic polynomial X^m + c_{m-1} X^{m-1} + ... + c_0 with integer
/// coefficients. Only the m lower coefficients are stored.
class MonicPoly {
 public:
  /// The constant polynomial 1.
  MonicPoly() = default;
  explicit MonicPoly(std::vector<Integer> lower) : lower_(std::move(lower)) {}

  /// From a dense list whose last entry must be 1
  /// (Errc::InvalidArgument otherwise).
  static MonicPoly from_dense(const IntPoly& dense);

  /// X^m.
  static MonicPoly monomial(std::size_t m) { return MonicPoly(std::vector<Integer>(m, Integer(0))); }

  std::size_t degree() const { return lower_.size(); }

  /// Coefficient of X^i; 1 at the degree and 0 above it.
  Integer coeff(std::size_t i) const;

  std::span<const Integer> lower() const { return lower_; }
  std::vector<Integer>& lower_mut() { return lower_; }

  /// All m + 1 coefficients.
  IntPoly dense() const;

  friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

 private:
  std::vector<Integer> lower_;
};

MonicPoly operator*(const MonicPoly& a, const MonicPoly& b);

/// Product of all polynomials; the empty product is 1.
MonicPoly product(std::span<const MonicPoly> ps);

/// Product of all polynomials except ps[k] (0-based).
/// Throws Errc::IndexOutOfRange.
MonicPoly omit_product(std::span<const MonicPoly> ps, std::size_t k);

IntPoly subtract(const IntPoly& a, const IntPoly& b);

/// Minimum valuation over all coefficients; infinite for the zero polynomial.
Valuation content_valuation(const IntPoly& a, const PadicContext& ctx);

/// True iff every coefficient of a - b is divisible by p^r.
bool congruent_mod(const IntPoly& a, const IntPoly& b, std::uint64_t r, const PadicContext& ctx);
bool congruent_mod(const MonicPoly& a, const MonicPoly& b, std::uint64_t r, const PadicContext& ctx);

/// True iff a ≡ X^deg(a) mod p.
bool is_monomial_mod_p(const MonicPoly& a, const PadicContext& ctx);

IntPoly derivative(const MonicPoly& f);

/// Determinant of the classical Sylvester matrix of g and h. The second
/// argument need not be monic; its degree is taken from its last nonzero
/// coefficient. Throws Errc::DegreeZero if either degree is 0.
Integer sylvester_resultant(const MonicPoly& g, const IntPoly& h);
Integer sylvester_resultant(const MonicPoly& g, const MonicPoly& h);

/// (-1)^{m(m-1)/2} Res(f, f'). Degree 1 gives 1. Throws Errc::DegreeZero.
Integer discriminant(const MonicPoly& f);

/// Human-readable rendering such as "X^3 + 9*X^2 - 14*X + 8".
std::string to_string(const MonicPoly& f);

}  // namespace henselift

#pragma once

// Truncated p-adic integers: residues modulo p^N, valuations, unit inverses.

#include <henselift/integer.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace henselift {

/// p-adic valuation. Zero has infinite valuation, kept as an explicit state
/// rather than a large number; value() throws on it.
class Valuation {
 public:
  constexpr Valuation() = default;  // infinite
  constexpr explicit Valuation(std::uint64_t v) : v_(v) {}

  static constexpr Valuation infinite() { return Valuation(); }

  constexpr bool is_infinite() const { return !v_.has_value(); }
  constexpr bool is_finite() const { return v_.has_value(); }

  std::uint64_t value() const;

  /// Finite value, or `cap` when infinite.
  constexpr std::uint64_t value_or(std::uint64_t cap) const { return v_.value_or(cap); }

  constexpr friend bool operator==(const Valuation&, const Valuation&) = default;
  constexpr friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite())
      return a.is_infinite() <=> b.is_infinite();
    return *a.v_ <=> *b.v_;
  }
  constexpr friend bool operator==(const Valuation& a, std::uint64_t b) { return a.v_ == b; }
  constexpr friend std::strong_ordering operator<=>(const Valuation& a, std::uint64_t b) {
    return a <=> Valuation(b);
  }

  constexpr friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return Valuation(*a.v_ + *b.v_);
  }

 private:
  std::optional<std::uint64_t> v_;
};

std::string to_string(const Valuation& v);

/// The base ring Z_p with uniformizer p.
class PadicContext {
 public:
  static constexpr std::uint64_t kDefaultPrecisionCap = std::uint64_t{1} << 22;

  /// Throws Errc::NotPrime unless p is prime, Errc::InvalidArgument if the
  /// cap is zero.
  explicit PadicContext(std::uint64_t p, std::uint64_t precision_cap = kDefaultPrecisionCap);

  std::uint64_t prime() const { return p_; }
  const Integer& prime_integer() const { return p_int_; }
  std::uint64_t precision_cap() const { return cap_; }

  /// p^n. Throws Errc::InvalidArgument when n exceeds the precision cap.
  Integer power(std::uint64_t n) const;

  friend bool operator==(const PadicContext& a, const PadicContext& b) {
    return a.p_ == b.p_ && a.cap_ == b.cap_;
  }

 private:
  std::uint64_t p_;
  Integer p_int_;
  std::uint64_t cap_;
};

/// An element of Z/p^prec, stored as its representative in [0, p^prec).
struct Residue {
  Integer value;
  std::uint64_t prec = 0;
};

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

Valuation valuation(const Integer& x, const PadicContext& ctx);

/// Representative of x in [0, p^n).
Residue canonical(const Integer& x, std::uint64_t n, const PadicContext& ctx);

/// Representative of x in (-p^n/2, p^n/2]; for p = 2 the midpoint p^n/2
/// itself is kept positive.
Integer balanced(const Integer& x, std::uint64_t n, const PadicContext& ctx);

/// Inverse modulo p^prec. Throws Errc::NotAUnit if p divides x.value.
Residue inv_unit(const Residue& x, const PadicContext& ctx);

/// x / p^n, which must be exact (Errc::InsufficientValuation otherwise).
Integer divide_by_power(const Integer& x, std::uint64_t n, const PadicContext& ctx);

}  // namespace henselift

#include <henselift/error.hpp>
#include <henselift/ring.hpp>

#include <array>

namespace henselift {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::EmptyFactorList: return "EmptyFactorList";
    case Errc::DegreeZeroFactor: return "DegreeZeroFactor";
    case Errc::ZeroResultant: return "ZeroResultant";
    case Errc::NotSpecialForm: return "NotSpecialForm";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::PrecisionTooLow: return "PrecisionTooLow";
    case Errc::InsufficientValuation: return "InsufficientValuation";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotCongruent: return "NotCongruent";
    case Errc::PrecisionBoundViolated: return "PrecisionBoundViolated";
    case Errc::MaxStepsExceeded: return "MaxStepsExceeded";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool parse_integer(std::string_view text, Integer& out) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9') return false;
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::uint64_t Valuation::value() const {
  if (!v_) throw Error(Errc::InvalidArgument, "value() of infinite valuation");
  return *v_;
}

std::string to_string(const Valuation& v) {
  return v.is_infinite() ? std::string("inf") : std::to_string(v.value());
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : bases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (auto a : bases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PadicContext::PadicContext(std::uint64_t p, std::uint64_t precision_cap)
    : p_(p), cap_(precision_cap) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (precision_cap == 0) throw Error(Errc::InvalidArgument, "precision cap must be >= 1");
  mpz_set_ui(p_int_.get_mpz_t(), p);
}

Integer PadicContext::power(std::uint64_t n) const {
  if (n > cap_)
    throw Error(Errc::InvalidArgument,
                "exponent " + std::to_string(n) + " exceeds precision cap " + std::to_string(cap_));
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p_int_.get_mpz_t(), n);
  return r;
}

Valuation valuation(const Integer& x, const PadicContext& ctx) {
  if (sgn(x) == 0) return Valuation::infinite();
  if (ctx.prime() == 2) return Valuation(mpz_scan1(x.get_mpz_t(), 0));
  Integer rest;
  return Valuation(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), ctx.prime_integer().get_mpz_t()));
}

Residue canonical(const Integer& x, std::uint64_t n, const PadicContext& ctx) {
  Residue r;
  r.prec = n;
  if (n == 0) return r;
  const Integer mod = ctx.power(n);
  mpz_fdiv_r(r.value.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
  return r;
}

Integer balanced(const Integer& x, std::uint64_t n, const PadicContext& ctx) {
  if (n == 0) return 0;
  const Integer mod = ctx.power(n);
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
  Integer twice = r * 2;
  if (twice > mod) r -= mod;
  return r;
}

Residue inv_unit(const Residue& x, const PadicContext& ctx) {
  if (mpz_divisible_p(x.value.get_mpz_t(), ctx.prime_integer().get_mpz_t()))
    throw Error(Errc::NotAUnit, to_string(x.value) + " is divisible by " + std::to_string(ctx.prime()));
  Residue r;
  r.prec = x.prec;
  if (x.prec == 0) return r;
  const Integer mod = ctx.power(x.prec);
  mpz_invert(r.value.get_mpz_t(), x.value.get_mpz_t(), mod.get_mpz_t());
  return r;
}

Integer divide_by_power(const Integer& x, std::uint64_t n, const PadicContext& ctx) {
  const Integer d = ctx.power(n);
  if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
    throw Error(Errc::InsufficientValuation,
                "p^" + std::to_string(n) + " does not divide " + to_string(x));
  Integer q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return q;
}

}  // namespace henselift

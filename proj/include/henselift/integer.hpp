#pragma once

// Arbitrary-precision integers as an Eigen scalar.

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Literal = mpz_class;
  using Nested = mpz_class;

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 20,
    MulCost = 40
  };

  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace henselift {

using Integer = mpz_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = Matrix<Integer>;
using IntRowVector = RowVector<Integer>;

/// Parses an optionally signed decimal integer. Returns false on any other
/// input (no whitespace, no base prefixes).
bool parse_integer(std::string_view text, Integer& out);

inline std::string to_string(const Integer& x) { return x.get_str(10); }

}  // namespace henselift

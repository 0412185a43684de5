#pragma once

// Scalar domains: exact rationals (GMP) and double-precision complex numbers.

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace abinv {

using Rational = mpq_class;
using Complex = std::complex<double>;
using Index = std::int32_t;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view domain_name = "exact-rational";

  static Rational from_int(long v) { return Rational(v); }
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static double magnitude(const Rational& v) { return Rational(abs(v)).get_d(); }
  static std::string to_string(const Rational& v) { return v.get_str(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr std::string_view domain_name = "complex-float";

  static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
  static bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }
  static double magnitude(const Complex& v) { return std::abs(v); }
  static std::string to_string(const Complex& v);
};

/// A commutative field with the operations the kernels need.
template <class S>
concept FieldScalar = requires(const S& a, const S& b) {
  { S(a + b) };
  { S(a - b) };
  { S(a * b) };
  { S(a / b) };
  { S(-a) };
  { ScalarTraits<S>::from_int(1L) } -> std::convertible_to<S>;
  { ScalarTraits<S>::is_zero(a) } -> std::convertible_to<bool>;
  { ScalarTraits<S>::magnitude(a) } -> std::convertible_to<double>;
};

template <FieldScalar S>
S zero() { return ScalarTraits<S>::from_int(0); }

template <FieldScalar S>
S one() { return ScalarTraits<S>::from_int(1); }

template <FieldScalar S>
bool is_zero(const S& v) { return ScalarTraits<S>::is_zero(v); }

template <FieldScalar S>
double magnitude(const S& v) { return ScalarTraits<S>::magnitude(v); }

/// Equality in the scalar's own sense: exact for rationals, |a-b| <= tol for floats.
template <FieldScalar S>
bool approx_equal(const S& a, const S& b, double tol) {
  if constexpr (ScalarTraits<S>::exact) {
    return a == b;
  } else {
    return ScalarTraits<S>::magnitude(a - b) <= tol;
  }
}

/// Integer power, negative exponents allowed (base must then be nonzero).
template <FieldScalar S>
S ipow(const S& base, long exponent);

/// Parses "n", "n/d" or a plain decimal ("-0.25") into an exact rational.
Rational parse_rational(std::string_view text);

/// Parses a real number (decimal, exponent form, or "n/d") into a complex with zero imaginary part.
Complex parse_complex(std::string_view text);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

template <FieldScalar S>
S ipow(const S& base, long exponent) {
  if (exponent < 0) return one<S>() / ipow(base, -exponent);
  S result = one<S>();
  S b = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

}  // namespace abinv

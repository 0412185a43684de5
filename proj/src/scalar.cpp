#include "abinv/scalar.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "abinv/error.hpp"

namespace abinv {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Rational parse_integer(std::string_view s, std::string_view full) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s)) throw Error(ErrorCode::ConfigError, "not a rational: '" + std::string(full) + "'");
  mpz_class z(std::string(s), 10);
  if (negative) z = -z;
  return Rational(z);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_integer(trim(s.substr(0, slash)), s);
    Rational den = parse_integer(trim(s.substr(slash + 1)), s);
    if (sgn(den) == 0) throw Error(ErrorCode::ConfigError, "zero denominator in '" + std::string(s) + "'");
    Rational r = num / den;
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if ((!whole.empty() && !is_digits(whole)) || !is_digits(frac)) {
      throw Error(ErrorCode::ConfigError, "not a rational: '" + std::string(s) + "'");
    }
    mpz_class digits(std::string(whole) + std::string(frac), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r(negative ? mpz_class(-digits) : digits, scale);
    r.canonicalize();
    return r;
  }
  return parse_integer(s, s);
}

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.find('/') != std::string_view::npos) return Complex(parse_rational(s).get_d(), 0.0);
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || s.empty()) {
    throw Error(ErrorCode::ConfigError, "not a real number: '" + std::string(s) + "'");
  }
  return Complex(v, 0.0);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string ScalarTraits<Complex>::to_string(const Complex& v) {
  if (v.imag() == 0.0) return format_double(v.real());
  std::string im = format_double(v.imag());
  if (v.imag() >= 0.0) im = "+" + im;
  return format_double(v.real()) + im + "i";
}

}  // namespace abinv

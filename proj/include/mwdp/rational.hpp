#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "mwdp/error.hpp"

namespace mwdp {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}             // NOLINT(implicit)
  Rational(std::int64_t v) : value_(v) {}    // NOLINT(implicit)
  Rational(const Integer& v) : value_(v) {}  // NOLINT(implicit)
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator");
    value_ = boost::multiprecision::cpp_rational(num, den);
  }

  /// Accepts integers ("-3"), plain decimals ("0.25") and fractions ("7/3").
  static Rational parse(std::string_view text);

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const {
    return boost::multiprecision::denominator(value_);
  }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  /// Integers print as "n", everything else as "p/q".
  std::string str() const;

  /// The value as int64 if it is an integer in range.
  std::optional<std::int64_t> as_int64() const;

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.value_ == 0) throw Error(ErrorCode::Internal, "division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  boost::multiprecision::cpp_rational value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}
inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// cpp_int reads a leading 0 as an octal prefix.
inline Integer decimal_digits(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return Integer(std::string(s));
}

inline Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw Error(ErrorCode::Parse,
                "malformed rational '" + std::string(whole) + "'");
  Integer v = decimal_digits(s);
  return negative ? Integer(-v) : v;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = detail::parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!detail::all_digits(den_text))
      throw Error(ErrorCode::Parse,
                  "malformed rational '" + std::string(text) + "'");
    Integer den = detail::decimal_digits(den_text);
    if (den == 0)
      throw Error(ErrorCode::Parse,
                  "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
      int_part.remove_prefix(1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !detail::all_digits(int_part)) ||
        (!frac_part.empty() && !detail::all_digits(frac_part)))
      throw Error(ErrorCode::Parse,
                  "malformed decimal '" + std::string(text) + "'");
    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer num = detail::decimal_digits(digits.empty() ? std::string("0") : digits);
    Integer den = boost::multiprecision::pow(Integer(10),
                                             static_cast<unsigned>(frac_part.size()));
    if (negative) num = -num;
    return Rational(num, den);
  }

  return Rational(detail::parse_integer(s, text));
}

inline std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

inline std::optional<std::int64_t> Rational::as_int64() const {
  if (!is_integer()) return std::nullopt;
  Integer n = numerator();
  if (n > Integer(INT64_MAX) || n < Integer(INT64_MIN)) return std::nullopt;
  return static_cast<std::int64_t>(n);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

}  // namespace mwdp

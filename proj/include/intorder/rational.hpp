#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "intorder/errors.hpp"

namespace intorder {

/// Exact rational with int64 numerator/denominator kept in lowest terms,
/// denominator positive. All comparisons cross-multiply in 128-bit, so there
/// is no rounding anywhere. Endpoint arithmetic in this project stays tiny;
/// overflow of the 64-bit normal form is treated as a hard error.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design

  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    num_ = num;
    den_ = den;
  }

  /// Accepts "p" or "p/q" with optional leading minus; anything else
  /// (including decimal notation) is rejected.
  static Rational parse(const std::string& text) {
    auto bad = [&]() -> ParseError {
      return ParseError("not a rational literal: '" + text + "'");
    };
    std::size_t slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        return Rational(parse_int(text));
      }
      std::int64_t num = parse_int(text.substr(0, slash));
      std::int64_t den = parse_int(text.substr(slash + 1));
      if (den <= 0) throw bad();
      return Rational(num, den);
    } catch (const std::invalid_argument&) {
      throw bad();
    } catch (const std::out_of_range&) {
      throw bad();
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make_checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                        i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make_checked(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                        i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make_checked(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make_checked(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using i128 = __int128;

  static std::int64_t parse_int(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty");
    std::size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("sign only");
    for (std::size_t i = start; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9')
        throw std::invalid_argument("non-digit");
    }
    std::size_t used = 0;
    std::int64_t value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing junk");
    return value;
  }

  static Rational make_checked(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
      throw std::overflow_error("rational out of 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace intorder

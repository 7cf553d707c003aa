#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace crcoh {

/// Exact rational number over 64-bit integers, always in lowest terms with a
/// positive denominator. Intermediate products are formed in 128 bits; a
/// result that does not fit back into 64 bits throws std::overflow_error.
class Rational {
 public:
  using Int = std::int64_t;

  constexpr Rational() noexcept = default;
  Rational(Int numerator) noexcept : num_(numerator) {}  // NOLINT: implicit by design of the arithmetic
  Rational(Int numerator, Int denominator);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  /// Largest integer not exceeding the value.
  Int floor() const noexcept;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or "p" when q == 1.
  std::string str() const;

  /// Accepts "p", "p/q", with an optional leading sign on p and q > 0.
  /// Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// The representative of x modulo 1 in [0, 1).
Rational frac_part(const Rational& x);

/// Integer power, exponent may be negative for nonzero base.
Rational pow(const Rational& base, std::int64_t exponent);

}  // namespace crcoh

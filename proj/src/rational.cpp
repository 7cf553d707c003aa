#include "crcoh/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace crcoh {
namespace {

__extension__ using Wide = __int128;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational::Int narrow(Wide v) {
  if (v > std::numeric_limits<Rational::Int>::max() ||
      v < std::numeric_limits<Rational::Int>::min()) {
    throw std::overflow_error("rational arithmetic overflowed 64 bits");
  }
  return static_cast<Rational::Int>(v);
}

// Builds a reduced rational from a wide fraction with nonzero denominator.
Rational make(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(Int numerator, Int denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  Wide n = numerator;
  Wide d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n == 0) d = 1;
  num_ = narrow(n);
  den_ = narrow(d);
}

Rational::Int Rational::floor() const noexcept {
  Int q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::operator-() const { return make(-Wide(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  return *this = make(Wide(num_) * rhs.den_ + Wide(rhs.num_) * den_,
                      Wide(den_) * rhs.den_);
}

Rational& Rational::operator-=(const Rational& rhs) {
  return *this = make(Wide(num_) * rhs.den_ - Wide(rhs.num_) * den_,
                      Wide(den_) * rhs.den_);
}

Rational& Rational::operator*=(const Rational& rhs) {
  return *this = make(Wide(num_) * rhs.num_, Wide(den_) * rhs.den_);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  return *this = make(Wide(num_) * rhs.den_, Wide(den_) * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part, bool allow_sign) -> Int {
    if (part.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    std::size_t start = 0;
    if (part.front() == '+' || part.front() == '-') {
      if (!allow_sign || part.size() == 1)
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
      start = part.front() == '-' ? 0 : 1;
    }
    Int value = 0;
    const char* first = part.data() + start;
    const char* last = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return value;
  };

  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  Int num = parse_int(text.substr(0, slash), true);
  Int den = parse_int(text.substr(slash + 1), false);
  if (den <= 0) throw std::invalid_argument("rational denominator must be positive: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational frac_part(const Rational& x) { return x - Rational(x.floor()); }

Rational pow(const Rational& base, std::int64_t exponent) {
  Rational result(1);
  Rational factor = exponent < 0 ? Rational(1) / base : base;
  for (std::int64_t e = exponent < 0 ? -exponent : exponent; e > 0; --e) result *= factor;
  return result;
}

}  // namespace crcoh

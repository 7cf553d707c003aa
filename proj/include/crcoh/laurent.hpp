#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "crcoh/rational.hpp"

namespace crcoh {

/// coeff * u^power. A zero coefficient is normalized to power 0.
class LaurentTerm {
 public:
  LaurentTerm() = default;
  LaurentTerm(Rational coeff, std::int64_t power);

  const Rational& coeff() const noexcept { return coeff_; }
  std::int64_t power() const noexcept { return power_; }

  friend LaurentTerm operator*(const LaurentTerm& a, const LaurentTerm& b);
  /// Throws std::domain_error when dividing by the zero term.
  friend LaurentTerm operator/(const LaurentTerm& a, const LaurentTerm& b);
  friend bool operator==(const LaurentTerm&, const LaurentTerm&) = default;

  std::string str() const;

 private:
  Rational coeff_;
  std::int64_t power_ = 0;
};

/// Finite sum of terms in u and 1/u. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const LaurentTerm& term);  // NOLINT: a term is a polynomial

  static LaurentPoly monomial(Rational coeff, std::int64_t power);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(std::int64_t power) const;

  /// Lowest power present; 0 for the zero polynomial.
  std::int64_t min_power() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Rational& s, const LaurentPoly& p);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string str() const;

 private:
  void add_term(std::int64_t power, const Rational& coeff);
  Terms terms_;
};

/// Coefficient of u^-1.
Rational residue(const LaurentPoly& p);

}  // namespace crcoh

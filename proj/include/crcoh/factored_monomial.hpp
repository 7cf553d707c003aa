#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "crcoh/laurent.hpp"
#include "crcoh/rational.hpp"

namespace crcoh {

/// coeff * u^u_power * prod_j (w_j u)^{e_j} with rational exponents.
///
/// The bases w_j are not stored; they belong to the ambient weight vector and
/// are supplied at collapse time. Fractional exponents are kept symbolic so
/// that products of twist factors cancel exactly: nothing is ever evaluated
/// until every exponent is integral.
class FactoredMonomial {
 public:
  using Factors = std::map<std::size_t, Rational>;

  FactoredMonomial() = default;
  /// Throws std::invalid_argument on a negative exponent; zero exponents are dropped.
  FactoredMonomial(Rational coeff, Rational u_power, Factors factors);

  static FactoredMonomial unit() { return {}; }

  const Rational& coeff() const noexcept { return coeff_; }
  const Rational& u_power() const noexcept { return u_power_; }
  const Factors& factors() const noexcept { return factors_; }
  Rational exponent(std::size_t j) const;

  /// u_power + sum of factor exponents.
  Rational total_degree() const;

  friend bool operator==(const FactoredMonomial&, const FactoredMonomial&) = default;

  std::string str() const;

 private:
  Rational coeff_{1};
  Rational u_power_{0};
  Factors factors_;
};

FactoredMonomial monomial_mul(const FactoredMonomial& a, const FactoredMonomial& b);

/// Evaluates the monomial as a single Laurent term, reading w_j = weights[j].
/// Throws Error(NonIntegralExponent) if u_power or any exponent is fractional,
/// and std::out_of_range for a factor index beyond the weight vector.
LaurentTerm collapse(const FactoredMonomial& m, std::span<const std::int64_t> weights);

}  // namespace crcoh

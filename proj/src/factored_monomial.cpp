#include "crcoh/factored_monomial.hpp"

#include <stdexcept>

#include "crcoh/error.hpp"

namespace crcoh {

FactoredMonomial::FactoredMonomial(Rational coeff, Rational u_power, Factors factors)
    : coeff_(coeff), u_power_(u_power) {
  for (const auto& [j, e] : factors) {
    if (e < Rational(0)) throw std::invalid_argument("factored monomial exponent must be nonnegative");
    if (!e.is_zero()) factors_.emplace(j, e);
  }
}

Rational FactoredMonomial::exponent(std::size_t j) const {
  auto it = factors_.find(j);
  return it == factors_.end() ? Rational(0) : it->second;
}

Rational FactoredMonomial::total_degree() const {
  Rational total = u_power_;
  for (const auto& [j, e] : factors_) total += e;
  return total;
}

std::string FactoredMonomial::str() const {
  std::string out = coeff_.str();
  if (!u_power_.is_zero()) out += " u^(" + u_power_.str() + ")";
  for (const auto& [j, e] : factors_)
    out += " (w" + std::to_string(j + 1) + " u)^(" + e.str() + ")";
  return out;
}

FactoredMonomial monomial_mul(const FactoredMonomial& a, const FactoredMonomial& b) {
  FactoredMonomial::Factors factors = a.factors();
  for (const auto& [j, e] : b.factors()) factors[j] += e;
  return FactoredMonomial(a.coeff() * b.coeff(), a.u_power() + b.u_power(), std::move(factors));
}

LaurentTerm collapse(const FactoredMonomial& m, std::span<const std::int64_t> weights) {
  if (!m.u_power().is_integer())
    throw Error(ErrorKind::NonIntegralExponent,
                "explicit u exponent " + m.u_power().str() + " is not an integer");
  Rational coeff = m.coeff();
  std::int64_t power = m.u_power().num();
  for (const auto& [j, e] : m.factors()) {
    if (j >= weights.size()) throw std::out_of_range("factor index beyond weight vector");
    if (!e.is_integer())
      throw Error(ErrorKind::NonIntegralExponent,
                  "exponent " + e.str() + " on coordinate " + std::to_string(j + 1) +
                      " is not an integer");
    coeff *= pow(Rational(weights[j]), e.num());
    power += e.num();
  }
  return LaurentTerm(coeff, power);
}

}  // namespace crcoh

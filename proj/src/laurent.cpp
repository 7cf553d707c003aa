#include "crcoh/laurent.hpp"

#include <stdexcept>

namespace crcoh {

LaurentTerm::LaurentTerm(Rational coeff, std::int64_t power)
    : coeff_(coeff), power_(coeff.is_zero() ? 0 : power) {}

LaurentTerm operator*(const LaurentTerm& a, const LaurentTerm& b) {
  return LaurentTerm(a.coeff_ * b.coeff_, a.power_ + b.power_);
}

LaurentTerm operator/(const LaurentTerm& a, const LaurentTerm& b) {
  if (b.coeff_.is_zero()) throw std::domain_error("division by the zero Laurent term");
  return LaurentTerm(a.coeff_ / b.coeff_, a.power_ - b.power_);
}

std::string LaurentTerm::str() const {
  return "(" + coeff_.str() + ")*u^" + std::to_string(power_);
}

LaurentPoly::LaurentPoly(const LaurentTerm& term) { add_term(term.power(), term.coeff()); }

LaurentPoly LaurentPoly::monomial(Rational coeff, std::int64_t power) {
  return LaurentPoly(LaurentTerm(coeff, power));
}

Rational LaurentPoly::coefficient(std::int64_t power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t LaurentPoly::min_power() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

void LaurentPoly::add_term(std::int64_t power, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [power, coeff] : rhs.terms_) add_term(power, coeff);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [power, coeff] : rhs.terms_) add_term(power, -coeff);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) out.add_term(pa + pb, ca * cb);
  return out;
}

LaurentPoly operator*(const Rational& s, const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [power, coeff] : p.terms_) out.add_term(power, s * coeff);
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [power, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    out += LaurentTerm(coeff, power).str();
  }
  return out;
}

Rational residue(const LaurentPoly& p) { return p.coefficient(-1); }

}  // namespace crcoh

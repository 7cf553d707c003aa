#include "crcoh/localization.hpp"

#include "crcoh/error.hpp"

namespace crcoh {

CRClass kirwan(const ValidatedDatum& d, const EquivariantClass& e) {
  const SectorInfo info = sector_info(d, e.sector);
  CRClass out;
  for (const auto& [power, coeff] : e.u_poly.terms()) {
    if (power < 0)
      throw Error(ErrorKind::DomainError, "equivariant classes are polynomial in u; got u^" + std::to_string(power));
    if (power <= info.dim) out.add(BasisElement{e.sector, power}, coeff);
  }
  return out;
}

FactoredMonomial equivariant_twist_restriction(const ValidatedDatum& d, const SectorLabel& t) {
  FactoredMonomial::Factors factors;
  for (std::size_t j = 0; j < d.n(); ++j) {
    Rational th = theta(d, t, j);
    if (!th.is_zero()) factors.emplace(j, th);
  }
  return FactoredMonomial(Rational(1), Rational(0), std::move(factors));
}

FactoredMonomial equivariant_euler_origin(const ValidatedDatum& d) {
  FactoredMonomial::Factors factors;
  for (std::size_t j = 0; j < d.n(); ++j) factors.emplace(j, Rational(1));
  return FactoredMonomial(Rational(d.finite_order()), Rational(0), std::move(factors));
}

WallCrossingReport triple_localized(const ValidatedDatum& d, const Triple& triple) {
  for (const auto& entry : triple) {
    if (entry.sector.finite.size() != d.finite().size())
      throw Error(ErrorKind::InvalidLabel, to_string(entry.sector) + " does not match the datum's finite part");
    if (entry.k < 0) throw Error(ErrorKind::InvalidBasisElement, "eta power must be nonnegative");
  }
  const SectorLabel product = compose(d, triple[0].sector, compose(d, triple[1].sector, triple[2].sector));
  if (!is_identity(product))
    throw Error(ErrorKind::NonComposable, "labels compose to " + to_string(product) + ", not the identity");

  FactoredMonomial integrand(Rational(1), Rational(triple[0].k + triple[1].k + triple[2].k), {});
  for (const auto& entry : triple)
    integrand = monomial_mul(integrand, equivariant_twist_restriction(d, entry.sector));

  WallCrossingReport report;
  report.triple = triple;
  report.numerator = collapse(integrand, d.weights());
  report.euler = collapse(equivariant_euler_origin(d), d.weights());
  report.collapsed = report.numerator / report.euler;
  report.degree_check = report.collapsed.power();
  report.value = residue(LaurentPoly(report.collapsed));
  for (std::size_t i = 0; i < 3; ++i) {
    report.side_existence[i].positive = sector_exists(d, triple[i].sector, Chamber::positive);
    report.side_existence[i].negative = sector_exists(d, triple[i].sector, Chamber::negative);
  }
  return report;
}

WallCrossingReport wall_crossing_delta(const ValidatedDatum& d, const Triple& triple) {
  WallCrossingReport report = triple_localized(d, triple);
  if (d.all_weights_positive())
    report.note = "negative chamber is empty; the delta is the positive-side 3-point function";
  else if (d.all_weights_negative())
    report.note = "positive chamber is empty; the delta is minus the negative-side 3-point function";
  else
    report.note = "both chambers are nonempty; only the wall contribution is computed";
  return report;
}

}  // namespace crcoh

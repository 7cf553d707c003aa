#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "crcoh/cr_ring.hpp"
#include "crcoh/factored_monomial.hpp"
#include "crcoh/laurent.hpp"
#include "crcoh/quotient.hpp"

namespace crcoh {

/// A class in the equivariant cohomology of the fixed locus of one sector:
/// a polynomial in the equivariant parameter u (nonnegative powers only).
struct EquivariantClass {
  SectorLabel sector;
  LaurentPoly u_poly;
};

/// u^k on sector t goes to eta^k 1_(t); powers above the sector dimension
/// truncate to zero. Throws Error(EmptySector) if t has no sector in the
/// chamber and Error(DomainError) for a negative power of u.
CRClass kirwan(const ValidatedDatum& d, const EquivariantClass& e);

/// Restriction of the equivariant twist factor of t to the origin:
/// prod over moved coordinates of (w_j u)^{theta_j}.
FactoredMonomial equivariant_twist_restriction(const ValidatedDatum& d, const SectorLabel& t);

/// |A| prod_j (w_j u): equivariant Euler class of the normal bundle of the
/// origin, counted on the orbifold point [0/A].
FactoredMonomial equivariant_euler_origin(const ValidatedDatum& d);

struct TripleEntry {
  SectorLabel sector;
  std::int64_t k = 0;

  friend bool operator==(const TripleEntry&, const TripleEntry&) = default;
};

using Triple = std::array<TripleEntry, 3>;

struct SideExistence {
  bool positive = false;
  bool negative = false;

  friend bool operator==(const SideExistence&, const SideExistence&) = default;
};

struct WallCrossingReport {
  Triple triple;
  Rational value;                 ///< residue at u = 0 of collapsed
  std::int64_t degree_check = 0;  ///< u-power of collapsed
  LaurentTerm numerator;          ///< u^{k1+k2+k3} times the three restrictions, collapsed
  LaurentTerm euler;              ///< collapsed equivariant Euler class
  LaurentTerm collapsed;          ///< numerator / euler
  std::array<SideExistence, 3> side_existence;
  std::string note;
};

/// Wall contribution of the triple at the origin. Throws Error(NonComposable)
/// unless t1 t2 t3 = 1; Error(NonIntegralExponent) would mean the twist
/// factors failed to cancel, which cannot happen for composable labels.
WallCrossingReport triple_localized(const ValidatedDatum& d, const Triple& triple);

/// triple_localized plus which sectors exist on each side of the wall.
WallCrossingReport wall_crossing_delta(const ValidatedDatum& d, const Triple& triple);

}  // namespace crcoh

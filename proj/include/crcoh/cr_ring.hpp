#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crcoh/quotient.hpp"
#include "crcoh/rational.hpp"

namespace crcoh {

/// eta^k 1_(sector): the k-th power of the hyperplane class on a twisted sector.
struct BasisElement {
  SectorLabel sector;
  std::int64_t k = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
  friend std::strong_ordering operator<=>(const BasisElement& a, const BasisElement& b) {
    if (auto cmp = a.sector <=> b.sector; cmp != 0) return cmp;
    return a.k <=> b.k;
  }
};

std::string to_string(const BasisElement& b);

/// Finite rational combination of basis elements. Zero coefficients are never stored.
class CRClass {
 public:
  using Terms = std::map<BasisElement, Rational>;

  CRClass() = default;
  CRClass(const BasisElement& b, Rational coeff = Rational(1));

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const BasisElement& b) const;

  void add(const BasisElement& b, const Rational& coeff);

  CRClass& operator+=(const CRClass& rhs);
  friend CRClass operator+(CRClass a, const CRClass& b) { return a += b; }
  friend CRClass operator*(const Rational& s, const CRClass& a);
  friend bool operator==(const CRClass&, const CRClass&) = default;

  std::string str() const;

 private:
  Terms terms_;
};

/// 2 (k + shift of the sector).
Rational cr_degree(const ValidatedDatum& d, const BasisElement& b);

/// Sector order from enumerate_sectors, then k ascending.
std::vector<BasisElement> basis(const ValidatedDatum& d);

/// Throws Error(EmptySector) or Error(InvalidBasisElement) if b is not part of basis(d).
void check_basis_element(const ValidatedDatum& d, const BasisElement& b);

Rational pairing(const ValidatedDatum& d, const BasisElement& a, const BasisElement& b);
Rational pairing(const ValidatedDatum& d, const CRClass& a, const CRClass& b);

/// Coordinates j with theta_s + theta_t = theta_st + 1, split by whether st fixes j.
struct ObstructionSet {
  IndexSet all;
  IndexSet obstruction;  ///< moved by st: obstruction bundle directions
  IndexSet pushforward;  ///< fixed by st: normal directions of the Thom pushforward
};

ObstructionSet obstruction_set(const ValidatedDatum& d, const SectorLabel& s, const SectorLabel& t);

/// Rank of the invariant H^1 of one line over the three-pointed sphere, from
/// the index formula chi = 1 - (theta1 + theta2 + theta3).
/// Throws Error(DomainError) if an angle lies outside [0, 1) or the sum is
/// not an integer.
int obstruction_rank_oracle(const Rational& theta1, const Rational& theta2, const Rational& theta3);

/// Chen-Ruan product. On basis elements:
///   eta^a 1_s  .  eta^b 1_t  =  (prod_{j in T} w_j) eta^{a+b+|T|} 1_st
/// with T = obstruction_set(s, t); zero when the fixed sets of s and t are
/// disjoint, when st has no sector in the chamber, or when the eta power
/// exceeds the dimension of the target sector.
CRClass cup(const ValidatedDatum& d, const BasisElement& a, const BasisElement& b);
CRClass cup(const ValidatedDatum& d, const CRClass& a, const CRClass& b);

Rational triple_direct(const ValidatedDatum& d, const CRClass& a, const CRClass& b, const CRClass& c);

struct StructureTable {
  std::vector<BasisElement> basis;
  std::vector<Rational> degrees;
  std::vector<std::vector<Rational>> pairing;
  /// Keyed by basis indices (i, j) with i <= j; every such pair is present.
  std::map<std::pair<std::size_t, std::size_t>, CRClass> products;

  friend bool operator==(const StructureTable&, const StructureTable&) = default;
};

StructureTable structure_constants(const ValidatedDatum& d);

/// Rank of a rational matrix by exact Gaussian elimination.
std::size_t matrix_rank(std::vector<std::vector<Rational>> m);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string counterexample;  ///< first failure, empty when passed
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool passed() const;
};

/// Unit, commutativity, associativity over all basis triples, degree
/// additivity, pairing nondegeneracy and grading, and the Frobenius property.
AxiomReport verify_ring_axioms(const ValidatedDatum& d);

}  // namespace crcoh

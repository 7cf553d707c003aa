#include "crcoh/cr_ring.hpp"

#include <algorithm>
#include <iterator>

#include "crcoh/error.hpp"

namespace crcoh {

std::string to_string(const BasisElement& b) {
  return "eta^" + std::to_string(b.k) + "*1(" + to_string(b.sector) + ")";
}

CRClass::CRClass(const BasisElement& b, Rational coeff) { add(b, coeff); }

Rational CRClass::coefficient(const BasisElement& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CRClass::add(const BasisElement& b, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CRClass& CRClass::operator+=(const CRClass& rhs) {
  for (const auto& [b, c] : rhs.terms_) add(b, c);
  return *this;
}

CRClass operator*(const Rational& s, const CRClass& a) {
  CRClass out;
  for (const auto& [b, c] : a.terms_) out.add(b, s * c);
  return out;
}

std::string CRClass::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*" + to_string(b);
  }
  return out;
}

Rational cr_degree(const ValidatedDatum& d, const BasisElement& b) {
  return Rational(2) * (Rational(b.k) + degree_shift(d, b.sector));
}

std::vector<BasisElement> basis(const ValidatedDatum& d) {
  std::vector<BasisElement> out;
  for (const auto& sector : enumerate_sectors(d))
    for (std::int64_t k = 0; k <= sector.dim; ++k) out.push_back({sector.label, k});
  return out;
}

void check_basis_element(const ValidatedDatum& d, const BasisElement& b) {
  SectorInfo info = sector_info(d, b.sector);
  if (b.k < 0 || b.k > info.dim)
    throw Error(ErrorKind::InvalidBasisElement,
                to_string(b) + ": eta power must lie in [0, " + std::to_string(info.dim) + "]");
}

Rational pairing(const ValidatedDatum& d, const BasisElement& a, const BasisElement& b) {
  check_basis_element(d, a);
  check_basis_element(d, b);
  if (b.sector != inverse(d, a.sector)) return Rational(0);
  const IndexSet fixed = fixed_set(d, a.sector);
  if (a.k + b.k != static_cast<std::int64_t>(fixed.size()) - 1) return Rational(0);
  Rational volume(d.finite_order());
  for (std::size_t j : fixed) volume *= Rational(d.weights()[j]);
  return Rational(1) / volume;
}

Rational pairing(const ValidatedDatum& d, const CRClass& a, const CRClass& b) {
  Rational total(0);
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) total += ca * cb * pairing(d, ba, bb);
  return total;
}

ObstructionSet obstruction_set(const ValidatedDatum& d, const SectorLabel& s, const SectorLabel& t) {
  const SectorLabel h = compose(d, s, t);
  ObstructionSet out;
  for (std::size_t j = 0; j < d.n(); ++j) {
    const Rational th = theta(d, h, j);
    if (theta(d, s, j) + theta(d, t, j) != th + Rational(1)) continue;
    out.all.push_back(j);
    (th.is_zero() ? out.pushforward : out.obstruction).push_back(j);
  }
  return out;
}

int obstruction_rank_oracle(const Rational& theta1, const Rational& theta2, const Rational& theta3) {
  for (const Rational* th : {&theta1, &theta2, &theta3})
    if (*th < Rational(0) || *th >= Rational(1))
      throw Error(ErrorKind::DomainError, "rotation angle " + th->str() + " outside [0, 1)");
  const Rational sum = theta1 + theta2 + theta3;
  if (!sum.is_integer())
    throw Error(ErrorKind::DomainError,
                "angles sum to " + sum.str() + "; the three elements do not compose to the identity");
  // Rank-one orbifold line over the sphere with three orbifold points:
  // chi = rank - sum of the normalized angles, and H^0 vanishes unless the
  // line is invariant, so h^1 = max(-chi, 0).
  const Rational chi = Rational(1) - sum;
  return chi < Rational(0) ? static_cast<int>((-chi).num()) : 0;
}

CRClass cup(const ValidatedDatum& d, const BasisElement& a, const BasisElement& b) {
  check_basis_element(d, a);
  check_basis_element(d, b);
  const std::vector<Rational> ta = thetas(d, a.sector);
  const std::vector<Rational> tb = thetas(d, b.sector);
  bool common = false;
  for (std::size_t j = 0; j < d.n() && !common; ++j) common = ta[j].is_zero() && tb[j].is_zero();
  if (!common) return {};

  const SectorLabel h = compose(d, a.sector, b.sector);
  if (!sector_exists(d, h)) return {};
  const std::vector<Rational> th = thetas(d, h);
  // Same rule as obstruction_set, inlined to reuse the angles.
  Rational coeff(1);
  std::int64_t overflow = 0;
  std::int64_t dim = -1;
  for (std::size_t j = 0; j < d.n(); ++j) {
    if (th[j].is_zero()) ++dim;
    if (ta[j] + tb[j] == th[j] + Rational(1)) {
      ++overflow;
      coeff *= Rational(d.weights()[j]);
    }
  }
  const std::int64_t power = a.k + b.k + overflow;
  if (power > dim) return {};
  return CRClass(BasisElement{h, power}, coeff);
}

CRClass cup(const ValidatedDatum& d, const CRClass& a, const CRClass& b) {
  CRClass out;
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) out += (ca * cb) * cup(d, ba, bb);
  return out;
}

Rational triple_direct(const ValidatedDatum& d, const CRClass& a, const CRClass& b, const CRClass& c) {
  return pairing(d, cup(d, a, b), c);
}

StructureTable structure_constants(const ValidatedDatum& d) {
  StructureTable table;
  table.basis = basis(d);
  const std::size_t size = table.basis.size();
  table.degrees.reserve(size);
  for (const auto& b : table.basis) table.degrees.push_back(cr_degree(d, b));
  table.pairing.assign(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) table.pairing[i][j] = pairing(d, table.basis[i], table.basis[j]);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) table.products[{i, j}] = cup(d, table.basis[i], table.basis[j]);
  return table;
}

std::size_t matrix_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      const Rational factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

namespace {

// Sparse vector over basis indices.
using IndexedClass = std::vector<std::pair<std::size_t, Rational>>;

class RingCheck {
 public:
  explicit RingCheck(const ValidatedDatum& d) : d_(d), table_(structure_constants(d)) {
    const std::size_t size = table_.basis.size();
    for (std::size_t i = 0; i < size; ++i) index_[table_.basis[i]] = i;
    products_.assign(size, std::vector<IndexedClass>(size));
    for (const auto& [key, cls] : table_.products) {
      IndexedClass v = indexed(cls);
      products_[key.first][key.second] = v;
      products_[key.second][key.first] = std::move(v);
    }
  }

  AxiomReport run() {
    AxiomReport report;
    report.checks.push_back(unit());
    report.checks.push_back(commutativity());
    report.checks.push_back(associativity());
    report.checks.push_back(degree_additivity());
    report.checks.push_back(nondegeneracy());
    report.checks.push_back(pairing_grading());
    report.checks.push_back(frobenius());
    return report;
  }

 private:
  IndexedClass indexed(const CRClass& cls) const {
    IndexedClass v;
    for (const auto& [b, c] : cls.terms()) v.emplace_back(index_.at(b), c);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  }

  const std::string& name(std::size_t i) {
    names_.resize(table_.basis.size());
    if (names_[i].empty()) names_[i] = to_string(table_.basis[i]);
    return names_[i];
  }

  // Sparse sum of scaled product rows, merged by index.
  static IndexedClass combine(std::vector<std::pair<std::size_t, Rational>> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    IndexedClass out;
    for (auto& [i, c] : terms) {
      if (!out.empty() && out.back().first == i)
        out.back().second += c;
      else
        out.emplace_back(i, c);
    }
    std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
    return out;
  }

  // (sum_m c_m e_m) * e_k
  IndexedClass times(const IndexedClass& x, std::size_t k) const {
    std::vector<std::pair<std::size_t, Rational>> terms;
    for (const auto& [m, c] : x)
      for (const auto& [r, cr] : products_[m][k]) terms.emplace_back(r, c * cr);
    return combine(std::move(terms));
  }

  AxiomCheck unit() {
    AxiomCheck check{"unit", true, {}};
    if (table_.basis.empty()) return check;  // empty quotient: the zero ring
    const BasisElement one{identity(d_), 0};
    auto it = index_.find(one);
    if (it == index_.end()) {
      check.passed = false;
      check.counterexample = "identity sector missing from a nonempty basis";
      return check;
    }
    for (std::size_t j = 0; j < table_.basis.size(); ++j) {
      const IndexedClass expected{{j, Rational(1)}};
      if (products_[it->second][j] != expected) {
        check.passed = false;
        check.counterexample = "1 * " + name(j) + " != " + name(j);
        return check;
      }
    }
    return check;
  }

  AxiomCheck commutativity() {
    AxiomCheck check{"commutativity", true, {}};
    for (std::size_t i = 0; i < table_.basis.size(); ++i)
      for (std::size_t j = i + 1; j < table_.basis.size(); ++j)
        if (cup(d_, table_.basis[i], table_.basis[j]) != cup(d_, table_.basis[j], table_.basis[i])) {
          check.passed = false;
          check.counterexample = name(i) + " * " + name(j);
          return check;
        }
    return check;
  }

  AxiomCheck associativity() {
    AxiomCheck check{"associativity", true, {}};
    const std::size_t size = table_.basis.size();
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        for (std::size_t k = 0; k < size; ++k) {
          // products_ is the symmetrized table: e_i (e_j e_k) is read as (e_j e_k) e_i.
          if (times(products_[i][j], k) != times(products_[j][k], i)) {
            check.passed = false;
            check.counterexample = "(" + name(i) + " * " + name(j) + ") * " + name(k);
            return check;
          }
        }
    return check;
  }

  AxiomCheck degree_additivity() {
    AxiomCheck check{"degree_additivity", true, {}};
    for (const auto& [key, cls] : table_.products)
      for (const auto& [b, c] : cls.terms()) {
        const Rational expected = table_.degrees[key.first] + table_.degrees[key.second];
        if (table_.degrees[index_.at(b)] != expected) {
          check.passed = false;
          check.counterexample = name(key.first) + " * " + name(key.second) + " has a term in degree " +
                                 table_.degrees[index_.at(b)].str() + ", expected " + expected.str();
          return check;
        }
      }
    return check;
  }

  AxiomCheck nondegeneracy() {
    AxiomCheck check{"pairing_nondegenerate", true, {}};
    const std::size_t rank = matrix_rank(table_.pairing);
    if (rank != table_.basis.size()) {
      check.passed = false;
      check.counterexample = "pairing rank " + std::to_string(rank) + " < " +
                             std::to_string(table_.basis.size());
    }
    for (std::size_t i = 0; i < table_.basis.size() && check.passed; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (table_.pairing[i][j] != table_.pairing[j][i]) {
          check.passed = false;
          check.counterexample = "pairing not symmetric at " + name(i) + ", " + name(j);
          break;
        }
    return check;
  }

  AxiomCheck pairing_grading() {
    AxiomCheck check{"pairing_grading", true, {}};
    const Rational top(2 * (static_cast<std::int64_t>(d_.n()) - 1));
    for (std::size_t i = 0; i < table_.basis.size(); ++i)
      for (std::size_t j = 0; j < table_.basis.size(); ++j)
        if (!table_.pairing[i][j].is_zero() && table_.degrees[i] + table_.degrees[j] != top) {
          check.passed = false;
          check.counterexample = "<" + name(i) + ", " + name(j) + "> pairs degrees summing to " +
                                 (table_.degrees[i] + table_.degrees[j]).str();
          return check;
        }
    return check;
  }

  Rational pair(const IndexedClass& x, std::size_t j) const {
    Rational total(0);
    for (const auto& [i, c] : x) total += c * table_.pairing[i][j];
    return total;
  }

  AxiomCheck frobenius() {
    AxiomCheck check{"frobenius", true, {}};
    const std::size_t size = table_.basis.size();
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        for (std::size_t k = 0; k < size; ++k) {
          const Rational left = pair(products_[i][j], k);
          const Rational right = pair(products_[j][k], i);
          if (left != right) {
            check.passed = false;
            check.counterexample = "<" + name(i) + " * " + name(j) + ", " + name(k) + "> = " + left.str() +
                                   " but <" + name(i) + ", " + name(j) + " * " + name(k) + "> = " + right.str();
            return check;
          }
        }
    return check;
  }

  const ValidatedDatum& d_;
  StructureTable table_;
  std::map<BasisElement, std::size_t> index_;
  std::vector<std::vector<IndexedClass>> products_;
  std::vector<std::string> names_;
};

}  // namespace

AxiomReport verify_ring_axioms(const ValidatedDatum& d) { return RingCheck(d).run(); }

}  // namespace crcoh

#include "crcoh/selftest.hpp"

#include <algorithm>

#include "crcoh/cr_ring.hpp"
#include "crcoh/localization.hpp"

namespace crcoh {
namespace {

void fail(PropertyResult& r, const std::string& detail) {
  if (!r.passed) return;
  r.passed = false;
  r.detail = detail;
}

std::vector<SectorInfo> sectors_on_relevant_sides(const ValidatedDatum& d) {
  if (d.all_weights_positive() || d.all_weights_negative()) return enumerate_sectors(d);
  std::vector<SectorInfo> out = enumerate_sectors(d.with_chamber(Chamber::positive));
  for (auto& s : enumerate_sectors(d.with_chamber(Chamber::negative))) {
    bool seen = std::any_of(out.begin(), out.end(), [&](const SectorInfo& x) { return x.label == s.label; });
    if (!seen) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

bool SelftestReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

PropertyResult check_path_agreement(const ValidatedDatum& d) {
  PropertyResult r{"path_agreement", "direct_equals_localized", true, false, 0, {}};
  const auto sectors = enumerate_sectors(d);
  for (const auto& s : sectors)
    for (const auto& t : sectors) {
      const SectorLabel third = inverse(d, compose(d, s.label, t.label));
      if (!sector_exists(d, third)) continue;
      const SectorInfo u = sector_info(d, third);
      for (std::int64_t k1 = 0; k1 <= s.dim; ++k1)
        for (std::int64_t k2 = 0; k2 <= t.dim; ++k2)
          for (std::int64_t k3 = 0; k3 <= u.dim; ++k3) {
            const BasisElement a{s.label, k1}, b{t.label, k2}, c{third, k3};
            const Rational direct = triple_direct(d, CRClass(a), CRClass(b), CRClass(c));
            const auto loc = triple_localized(d, {TripleEntry{s.label, k1}, {t.label, k2}, {third, k3}});
            ++r.cases;
            if (direct != loc.value)
              fail(r, "<" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ">: direct " +
                          direct.str() + " vs localized " + loc.value.str());
          }
    }
  return r;
}

PropertyResult check_shift_complement(const ValidatedDatum& d) {
  PropertyResult r{"sectors", "shift_complement", true, false, 0, {}};
  const auto sectors = sectors_on_relevant_sides(d);
  for (const auto& s : sectors) {
    const SectorLabel inv = inverse(d, s.label);
    ++r.cases;
    for (std::size_t j = 0; j < d.n(); ++j) {
      const Rational sum = theta(d, s.label, j) + theta(d, inv, j);
      const bool fixed = std::binary_search(s.fixed_set.begin(), s.fixed_set.end(), j);
      if (sum != Rational(fixed ? 0 : 1))
        fail(r, to_string(s.label) + ": theta + inverse theta = " + sum.str() + " on coordinate " +
                    std::to_string(j + 1));
    }
    const Rational expected(static_cast<std::int64_t>(d.n() - s.fixed_set.size()));
    if (s.shift + degree_shift(d, inv) != expected)
      fail(r, to_string(s.label) + ": shift + inverse shift != n - |fixed set|");
    if (fixed_set(d, inv) != s.fixed_set) fail(r, to_string(s.label) + ": inverse has a different fixed set");
    const bool closed = std::any_of(sectors.begin(), sectors.end(), [&](const SectorInfo& x) { return x.label == inv; });
    if (!closed) fail(r, to_string(s.label) + ": inverse is not an enumerated sector");
  }
  return r;
}

PropertyResult check_obstruction_oracle(const ValidatedDatum& d) {
  PropertyResult r{"sectors", "obstruction_index_oracle", true, false, 0, {}};
  const auto sectors = sectors_on_relevant_sides(d);
  for (const auto& s : sectors)
    for (const auto& t : sectors) {
      const SectorLabel h = compose(d, s.label, t.label);
      const SectorLabel hinv = inverse(d, h);
      const ObstructionSet obs = obstruction_set(d, s.label, t.label);
      if (s.shift + t.shift - degree_shift(d, h) != Rational(static_cast<std::int64_t>(obs.all.size())))
        fail(r, to_string(s.label) + " * " + to_string(t.label) + ": shift(s) + shift(t) - shift(st) != |T|");
      for (std::size_t j = 0; j < d.n(); ++j) {
        const Rational ts = theta(d, s.label, j), tt = theta(d, t.label, j), th = theta(d, hinv, j);
        if (ts.is_zero() || tt.is_zero() || th.is_zero()) continue;
        ++r.cases;
        const bool in_obs = std::binary_search(obs.obstruction.begin(), obs.obstruction.end(), j);
        if (in_obs != (obstruction_rank_oracle(ts, tt, th) == 1))
          fail(r, to_string(s.label) + " * " + to_string(t.label) + ": coordinate " + std::to_string(j + 1) +
                      " disagrees with the index formula");
      }
    }
  return r;
}

SelftestReport selftest(const ValidatedDatum& d) {
  SelftestReport report;
  std::vector<Chamber> chambers;
  if (d.all_weights_positive() || d.all_weights_negative())
    chambers.push_back(d.chamber());
  else
    chambers = {Chamber::positive, Chamber::negative};
  for (Chamber chamber : chambers) {
    const ValidatedDatum side = d.with_chamber(chamber);
    const AxiomReport axioms = verify_ring_axioms(side);
    const std::size_t basis_size = basis(side).size();
    for (const auto& check : axioms.checks)
      report.results.push_back({"ring_axioms[" + to_string(chamber) + "]", check.name, check.passed, false,
                                basis_size, check.counterexample});
  }
  report.results.push_back(check_shift_complement(d));
  report.results.push_back(check_obstruction_oracle(d));

  if (d.all_weights_positive()) {
    report.results.push_back(check_path_agreement(d.with_chamber(Chamber::positive)));
  } else {
    report.results.push_back({"path_agreement", "direct_equals_localized", true, true, 0,
                              "skipped: path agreement needs all weights positive (compact quotient on "
                              "one side, empty on the other)"});
  }
  return report;
}

nlohmann::json to_json(const SelftestReport& report) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : report.results) {
    nlohmann::json entry = {{"phase", r.phase}, {"name", r.name}, {"passed", r.passed},
                            {"skipped", r.skipped}, {"cases", r.cases}};
    if (!r.detail.empty()) entry["detail"] = r.detail;
    results.push_back(entry);
  }
  return {{"passed", report.passed()}, {"results", results}};
}

}  // namespace crcoh

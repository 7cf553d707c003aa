#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "crcoh/quotient.hpp"

namespace crcoh {

struct PropertyResult {
  std::string phase;  ///< e.g. "ring_axioms[positive]", "path_agreement"
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::size_t cases = 0;
  std::string detail;  ///< first counterexample, or the skip notice
};

struct SelftestReport {
  std::vector<PropertyResult> results;
  bool passed() const;
};

/// Every composable basis triple: the direct (cup then pair) and the
/// localized (residue at the origin) 3-point functions must agree.
PropertyResult check_path_agreement(const ValidatedDatum& d);

/// theta_j(t) + theta_j(t^-1) in {0, 1}, zero exactly on the fixed set, and
/// shift(t) + shift(t^-1) = n - |fixed_set(t)| for every sector.
PropertyResult check_shift_complement(const ValidatedDatum& d);

/// For every sector pair (s, t): shift(s) + shift(t) - shift(st) = |T|, and on
/// every coordinate moved by s, t and st, membership in the obstruction set
/// agrees with the index-formula oracle.
PropertyResult check_obstruction_oracle(const ValidatedDatum& d);

/// Ring axioms (per chamber for mixed-sign weights) plus the checks above.
/// The path-agreement phase only runs when every weight is positive.
SelftestReport selftest(const ValidatedDatum& d);

nlohmann::json to_json(const SelftestReport& report);

}  // namespace crcoh

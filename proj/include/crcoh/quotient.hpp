#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "crcoh/rational.hpp"

namespace crcoh {

enum class Chamber { positive, negative };

std::string to_string(Chamber chamber);

/// Generator of a cyclic group Z/order acting on coordinate j by
/// exp(2 pi i phases[j] / order).
struct FiniteCyclicFactor {
  std::int64_t order = 2;
  std::vector<std::int64_t> phases;

  friend bool operator==(const FiniteCyclicFactor&, const FiniteCyclicFactor&) = default;
};

/// C^n // (S^1 x A), with S^1 acting by the circle weights and A the product
/// of the finite cyclic factors acting diagonally.
struct QuotientDatum {
  std::size_t n = 0;
  std::vector<std::int64_t> weights;
  std::vector<FiniteCyclicFactor> finite;
  Chamber chamber = Chamber::positive;

  friend bool operator==(const QuotientDatum&, const QuotientDatum&) = default;
};

/// A group element (e^{2 pi i c}, a_1, ..., a_r). Only produced in reduced form
/// by make_label / compose / inverse.
struct SectorLabel {
  Rational c;
  std::vector<std::int64_t> finite;

  friend bool operator==(const SectorLabel&, const SectorLabel&) = default;
  friend std::strong_ordering operator<=>(const SectorLabel& a, const SectorLabel& b);
};

std::string to_string(const SectorLabel& label);

/// Sorted, zero-based coordinate indices.
using IndexSet = std::vector<std::size_t>;

/// A datum that passed validate_datum. Immutable.
class ValidatedDatum {
 public:
  const QuotientDatum& datum() const noexcept { return datum_; }
  std::size_t n() const noexcept { return datum_.n; }
  const std::vector<std::int64_t>& weights() const noexcept { return datum_.weights; }
  const std::vector<FiniteCyclicFactor>& finite() const noexcept { return datum_.finite; }
  Chamber chamber() const noexcept { return datum_.chamber; }

  /// |A|, the order of the finite part (1 when there is none).
  std::int64_t finite_order() const noexcept { return finite_order_; }
  bool all_weights_positive() const noexcept;
  bool all_weights_negative() const noexcept;

  /// Same action viewed from the other side of the wall.
  ValidatedDatum with_chamber(Chamber chamber) const;

 private:
  friend ValidatedDatum validate_datum(QuotientDatum d);
  explicit ValidatedDatum(QuotientDatum d);

  QuotientDatum datum_;
  std::int64_t finite_order_ = 1;
};

/// Throws Error(InvalidDatum) for shape problems, Error(ZeroWeight) and
/// Error(IneffectiveAction) for the corresponding geometric failures.
ValidatedDatum validate_datum(QuotientDatum d);

/// Reduces c mod 1 and each finite component mod its order. Throws
/// Error(InvalidLabel) if the number of finite components is wrong.
SectorLabel make_label(const ValidatedDatum& d, const Rational& c,
                       std::vector<std::int64_t> finite = {});

SectorLabel identity(const ValidatedDatum& d);
SectorLabel compose(const ValidatedDatum& d, const SectorLabel& s, const SectorLabel& t);
SectorLabel inverse(const ValidatedDatum& d, const SectorLabel& t);
bool is_identity(const SectorLabel& t);

/// Rotation angle of t on coordinate j (zero-based), in [0, 1).
Rational theta(const ValidatedDatum& d, const SectorLabel& t, std::size_t j);
std::vector<Rational> thetas(const ValidatedDatum& d, const SectorLabel& t);

IndexSet fixed_set(const ValidatedDatum& d, const SectorLabel& t);

/// Sum of theta over the coordinates t moves.
Rational degree_shift(const ValidatedDatum& d, const SectorLabel& t);

/// Whether t labels a nonempty twisted sector on the given side of the wall:
/// its fixed set must contain a coordinate whose weight has the chamber's sign.
bool sector_exists(const ValidatedDatum& d, const SectorLabel& t, Chamber chamber);
bool sector_exists(const ValidatedDatum& d, const SectorLabel& t);

struct SectorInfo {
  SectorLabel label;
  IndexSet fixed_set;
  std::vector<Rational> thetas;
  Rational shift;
  std::int64_t dim = 0;  ///< |fixed_set| - 1
};

/// Throws Error(EmptySector) when t is not a sector in d's chamber.
SectorInfo sector_info(const ValidatedDatum& d, const SectorLabel& t);

/// Identity first, then by (c, finite components). Duplicate-free.
std::vector<SectorInfo> enumerate_sectors(const ValidatedDatum& d);

}  // namespace crcoh

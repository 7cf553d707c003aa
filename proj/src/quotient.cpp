#include "crcoh/quotient.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "crcoh/error.hpp"

namespace crcoh {
namespace {

// phi_j(a) = sum_k a_k * phases_k[j] / order_k, not reduced.
Rational finite_phase(const QuotientDatum& d, const std::vector<std::int64_t>& a, std::size_t j) {
  Rational phase(0);
  for (std::size_t k = 0; k < d.finite.size(); ++k)
    phase += Rational(a[k] * d.finite[k].phases[j], d.finite[k].order);
  return phase;
}

Rational raw_theta(const QuotientDatum& d, const Rational& c, const std::vector<std::int64_t>& a,
                   std::size_t j) {
  return frac_part(c * Rational(d.weights[j]) + finite_phase(d, a, j));
}

// Calls visit(a) for every tuple of finite components.
void for_each_finite_tuple(const QuotientDatum& d,
                           const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> a(d.finite.size(), 0);
  while (true) {
    visit(a);
    std::size_t k = 0;
    for (; k < a.size(); ++k) {
      if (++a[k] < d.finite[k].order) break;
      a[k] = 0;
    }
    if (k == a.size()) return;
  }
}

// Circle phases c (mod 1) that fix coordinate j together with the finite tuple a.
std::vector<Rational> phases_fixing(const QuotientDatum& d, const std::vector<std::int64_t>& a,
                                    std::size_t j) {
  std::vector<Rational> out;
  const std::int64_t w = d.weights[j];
  const Rational phi = finite_phase(d, a, j);
  const std::int64_t count = w < 0 ? -w : w;
  for (std::int64_t m = 0; m < count; ++m)
    out.push_back(frac_part((Rational(m) - phi) / Rational(w)));
  return out;
}

bool is_identity_tuple(const Rational& c, const std::vector<std::int64_t>& a) {
  return c.is_zero() && std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace

std::string to_string(Chamber chamber) {
  return chamber == Chamber::positive ? "positive" : "negative";
}

std::strong_ordering operator<=>(const SectorLabel& a, const SectorLabel& b) {
  if (auto cmp = a.c <=> b.c; cmp != 0) return cmp;
  return a.finite <=> b.finite;
}

std::string to_string(const SectorLabel& label) {
  std::string out = "c=" + label.c.str();
  if (!label.finite.empty()) {
    out += ",a=";
    for (std::size_t k = 0; k < label.finite.size(); ++k) {
      if (k) out += ':';
      out += std::to_string(label.finite[k]);
    }
  }
  return out;
}

ValidatedDatum::ValidatedDatum(QuotientDatum d) : datum_(std::move(d)) {
  for (const auto& f : datum_.finite) finite_order_ *= f.order;
}

bool ValidatedDatum::all_weights_positive() const noexcept {
  return std::all_of(weights().begin(), weights().end(), [](std::int64_t w) { return w > 0; });
}

bool ValidatedDatum::all_weights_negative() const noexcept {
  return std::all_of(weights().begin(), weights().end(), [](std::int64_t w) { return w < 0; });
}

ValidatedDatum ValidatedDatum::with_chamber(Chamber chamber) const {
  ValidatedDatum copy = *this;
  copy.datum_.chamber = chamber;
  return copy;
}

ValidatedDatum validate_datum(QuotientDatum d) {
  if (d.n < 1) throw Error(ErrorKind::InvalidDatum, "n must be at least 1");
  if (d.weights.size() != d.n)
    throw Error(ErrorKind::InvalidDatum, "weights has " + std::to_string(d.weights.size()) +
                                             " entries, expected n = " + std::to_string(d.n));
  for (std::size_t k = 0; k < d.finite.size(); ++k) {
    const auto& f = d.finite[k];
    if (f.order < 2)
      throw Error(ErrorKind::InvalidDatum, "finite factor " + std::to_string(k + 1) + " has order < 2");
    if (f.phases.size() != d.n)
      throw Error(ErrorKind::InvalidDatum,
                  "finite factor " + std::to_string(k + 1) + " needs exactly n phases");
    for (auto p : f.phases)
      if (p < 0 || p >= f.order)
        throw Error(ErrorKind::InvalidDatum,
                    "phase " + std::to_string(p) + " outside [0, " + std::to_string(f.order) + ")");
  }
  for (std::size_t j = 0; j < d.n; ++j)
    if (d.weights[j] == 0)
      throw Error(ErrorKind::ZeroWeight, "weight of coordinate " + std::to_string(j + 1) + " is zero");

  // An element acting trivially must in particular fix coordinate 1, so the
  // phases fixing coordinate 1 exhaust the candidates.
  for_each_finite_tuple(d, [&](const std::vector<std::int64_t>& a) {
    for (const Rational& c : phases_fixing(d, a, 0)) {
      if (is_identity_tuple(c, a)) continue;
      bool trivial = true;
      for (std::size_t j = 0; j < d.n && trivial; ++j) trivial = raw_theta(d, c, a, j).is_zero();
      if (trivial) {
        SectorLabel witness{c, a};
        throw Error(ErrorKind::IneffectiveAction,
                    "element " + to_string(witness) + " acts trivially on every coordinate");
      }
    }
  });
  return ValidatedDatum(std::move(d));
}

SectorLabel make_label(const ValidatedDatum& d, const Rational& c, std::vector<std::int64_t> finite) {
  if (finite.empty() && !d.finite().empty()) finite.assign(d.finite().size(), 0);
  if (finite.size() != d.finite().size())
    throw Error(ErrorKind::InvalidLabel,
                "label has " + std::to_string(finite.size()) + " finite components, datum has " +
                    std::to_string(d.finite().size()) + " factors");
  for (std::size_t k = 0; k < finite.size(); ++k) {
    const std::int64_t order = d.finite()[k].order;
    finite[k] = ((finite[k] % order) + order) % order;
  }
  return SectorLabel{frac_part(c), std::move(finite)};
}

SectorLabel identity(const ValidatedDatum& d) { return make_label(d, Rational(0)); }

SectorLabel compose(const ValidatedDatum& d, const SectorLabel& s, const SectorLabel& t) {
  std::vector<std::int64_t> finite(s.finite.size());
  for (std::size_t k = 0; k < finite.size(); ++k) finite[k] = s.finite[k] + t.finite.at(k);
  return make_label(d, s.c + t.c, std::move(finite));
}

SectorLabel inverse(const ValidatedDatum& d, const SectorLabel& t) {
  std::vector<std::int64_t> finite(t.finite.size());
  for (std::size_t k = 0; k < finite.size(); ++k) finite[k] = -t.finite[k];
  return make_label(d, -t.c, std::move(finite));
}

bool is_identity(const SectorLabel& t) { return is_identity_tuple(t.c, t.finite); }

Rational theta(const ValidatedDatum& d, const SectorLabel& t, std::size_t j) {
  if (j >= d.n()) throw std::out_of_range("coordinate index out of range");
  if (t.finite.size() != d.finite().size())
    throw Error(ErrorKind::InvalidLabel, "label does not match the datum's finite part");
  return raw_theta(d.datum(), t.c, t.finite, j);
}

std::vector<Rational> thetas(const ValidatedDatum& d, const SectorLabel& t) {
  std::vector<Rational> out(d.n());
  for (std::size_t j = 0; j < d.n(); ++j) out[j] = theta(d, t, j);
  return out;
}

IndexSet fixed_set(const ValidatedDatum& d, const SectorLabel& t) {
  IndexSet out;
  for (std::size_t j = 0; j < d.n(); ++j)
    if (theta(d, t, j).is_zero()) out.push_back(j);
  return out;
}

Rational degree_shift(const ValidatedDatum& d, const SectorLabel& t) {
  Rational shift(0);
  for (const Rational& th : thetas(d, t)) shift += th;
  return shift;
}

bool sector_exists(const ValidatedDatum& d, const SectorLabel& t, Chamber chamber) {
  for (std::size_t j : fixed_set(d, t)) {
    const std::int64_t w = d.weights()[j];
    if ((chamber == Chamber::positive && w > 0) || (chamber == Chamber::negative && w < 0)) return true;
  }
  return false;
}

bool sector_exists(const ValidatedDatum& d, const SectorLabel& t) {
  return sector_exists(d, t, d.chamber());
}

SectorInfo sector_info(const ValidatedDatum& d, const SectorLabel& t) {
  if (!sector_exists(d, t))
    throw Error(ErrorKind::EmptySector,
                to_string(t) + " labels no twisted sector in the " + to_string(d.chamber()) + " chamber");
  SectorInfo info;
  info.label = t;
  info.thetas = thetas(d, t);
  for (std::size_t j = 0; j < d.n(); ++j) {
    if (info.thetas[j].is_zero())
      info.fixed_set.push_back(j);
    else
      info.shift += info.thetas[j];
  }
  info.dim = static_cast<std::int64_t>(info.fixed_set.size()) - 1;
  return info;
}

std::vector<SectorInfo> enumerate_sectors(const ValidatedDatum& d) {
  std::set<SectorLabel> labels;
  for_each_finite_tuple(d.datum(), [&](const std::vector<std::int64_t>& a) {
    for (std::size_t j = 0; j < d.n(); ++j)
      for (const Rational& c : phases_fixing(d.datum(), a, j)) {
        SectorLabel t{c, a};
        if (sector_exists(d, t)) labels.insert(std::move(t));
      }
  });
  // The identity is the smallest label in this order, so sorted order already
  // puts it first whenever it exists.
  std::vector<SectorInfo> out;
  out.reserve(labels.size());
  for (const auto& t : labels) out.push_back(sector_info(d, t));
  return out;
}

}  // namespace crcoh

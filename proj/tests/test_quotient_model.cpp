#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "crcoh/error.hpp"
#include "crcoh/quotient.hpp"
#include "random_data.hpp"

using namespace crcoh;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

ValidatedDatum wp(std::vector<std::int64_t> w, Chamber chamber = Chamber::positive) {
  QuotientDatum d;
  d.n = w.size();
  d.weights = std::move(w);
  d.chamber = chamber;
  return validate_datum(d);
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no crcoh::Error thrown";
  return ErrorKind::DomainError;
}

// Independent sector oracle: every element of order dividing
// L = lcm(|w_j|) * prod(orders) is tried as c = m / L, and the rotation on
// coordinate j is tested for integrality directly.
std::set<SectorLabel> brute_force_sectors(const ValidatedDatum& d) {
  std::int64_t lcm = 1;
  for (auto w : d.weights()) lcm = std::lcm(lcm, w < 0 ? -w : w);
  for (const auto& f : d.finite()) lcm *= f.order;
  std::set<SectorLabel> out;
  std::vector<std::int64_t> a(d.finite().size(), 0);
  while (true) {
    for (std::int64_t m = 0; m < lcm; ++m) {
      Rational c(m, lcm);
      bool exists = false;
      for (std::size_t j = 0; j < d.n(); ++j) {
        Rational rot = c * Rational(d.weights()[j]);
        for (std::size_t k = 0; k < a.size(); ++k) rot += Rational(a[k] * d.finite()[k].phases[j], d.finite()[k].order);
        const bool side = d.chamber() == Chamber::positive ? d.weights()[j] > 0 : d.weights()[j] < 0;
        if (rot.is_integer() && side) exists = true;
      }
      if (exists) out.insert(SectorLabel{c, a});
    }
    std::size_t k = 0;
    for (; k < a.size(); ++k) {
      if (++a[k] < d.finite()[k].order) break;
      a[k] = 0;
    }
    if (k == a.size()) break;
  }
  return out;
}

}  // namespace

TEST(ValidateDatum, Examples) {
  EXPECT_NO_THROW(wp({1, 2, 2, 3, 3, 3}));
  EXPECT_EQ(kind_of([] { wp({2, 2}); }), ErrorKind::IneffectiveAction);
  EXPECT_EQ(kind_of([] { wp({1, 1, 0}); }), ErrorKind::ZeroWeight);
}

TEST(ValidateDatum, ShapeErrors) {
  QuotientDatum d;
  d.n = 2;
  d.weights = {1};
  EXPECT_EQ(kind_of([&] { validate_datum(d); }), ErrorKind::InvalidDatum);
  d.weights = {1, 1};
  d.finite = {{3, {0, 1, 2}}};
  EXPECT_EQ(kind_of([&] { validate_datum(d); }), ErrorKind::InvalidDatum);
  d.finite = {{3, {0, 3}}};
  EXPECT_EQ(kind_of([&] { validate_datum(d); }), ErrorKind::InvalidDatum);
  d.finite = {{1, {0, 0}}};
  EXPECT_EQ(kind_of([&] { validate_datum(d); }), ErrorKind::InvalidDatum);
  d.n = 0;
  d.weights = {};
  d.finite = {};
  EXPECT_EQ(kind_of([&] { validate_datum(d); }), ErrorKind::InvalidDatum);
}

TEST(ValidateDatum, FiniteParts) {
  QuotientDatum d;
  d.n = 3;
  d.weights = {1, 1, 1};
  // Diagonal Z3 coincides with the circle element c = 2/3.
  d.finite = {{3, {1, 1, 1}}};
  EXPECT_EQ(kind_of([&] { validate_datum(d); }), ErrorKind::IneffectiveAction);
  // Phases all zero: the generator acts trivially.
  d.finite = {{2, {0, 0, 0}}};
  EXPECT_EQ(kind_of([&] { validate_datum(d); }), ErrorKind::IneffectiveAction);
  d.finite = {{3, {0, 1, 2}}};
  ValidatedDatum ok = validate_datum(d);
  EXPECT_EQ(ok.finite_order(), 3);
}

TEST(GroupLaw, Examples) {
  ValidatedDatum d = wp({1, 2, 2, 3, 3, 3});
  SectorLabel third = make_label(d, q(1, 3));
  EXPECT_EQ(compose(d, third, third), make_label(d, q(2, 3)));
  EXPECT_EQ(inverse(d, third), make_label(d, q(2, 3)));
  EXPECT_EQ(compose(d, third, make_label(d, q(2, 3))), identity(d));
  EXPECT_TRUE(is_identity(identity(d)));
  EXPECT_EQ(make_label(d, q(7, 3)), third);
}

TEST(GroupLaw, FiniteComponentsReduce) {
  QuotientDatum raw{3, {1, 1, 3}, {{2, {0, 1, 1}}}, Chamber::positive};
  ValidatedDatum d = validate_datum(raw);
  SectorLabel a = make_label(d, q(1, 3), {1});
  EXPECT_EQ(compose(d, a, a), make_label(d, q(2, 3), {0}));
  EXPECT_EQ(inverse(d, a), make_label(d, q(2, 3), {1}));
  EXPECT_EQ(make_label(d, q(0), {-1}).finite, std::vector<std::int64_t>{1});
  EXPECT_EQ(kind_of([&] { make_label(d, q(0), {1, 1}); }), ErrorKind::InvalidLabel);
}

TEST(Theta, Examples) {
  ValidatedDatum d = wp({1, 2, 2, 3, 3, 3});
  SectorLabel third = make_label(d, q(1, 3));
  EXPECT_EQ(theta(d, third, 1), q(2, 3));
  EXPECT_EQ(theta(d, third, 3), q(0));
  for (std::size_t j = 0; j < d.n(); ++j) EXPECT_EQ(theta(d, identity(d), j), q(0));
}

TEST(FixedSet, Examples) {
  ValidatedDatum d = wp({1, 2, 2, 3, 3, 3});
  EXPECT_EQ(fixed_set(d, make_label(d, q(1, 3))), (IndexSet{3, 4, 5}));
  // Brute force: frac(w_j / 2) == 0 iff w_j is even.
  IndexSet even;
  for (std::size_t j = 0; j < d.n(); ++j)
    if (d.weights()[j] % 2 == 0) even.push_back(j);
  EXPECT_EQ(even, (IndexSet{1, 2}));
  EXPECT_EQ(fixed_set(d, make_label(d, q(1, 2))), even);
  EXPECT_EQ(fixed_set(d, identity(d)), (IndexSet{0, 1, 2, 3, 4, 5}));
}

TEST(DegreeShift, Examples) {
  ValidatedDatum d = wp({1, 2, 2, 3, 3, 3});
  EXPECT_EQ(degree_shift(d, make_label(d, q(1, 3))), q(5, 3));
  EXPECT_EQ(degree_shift(d, identity(d)), q(0));
  ValidatedDatum p112 = wp({1, 1, 2});
  // theta = (1/2, 1/2, 0)
  EXPECT_EQ(degree_shift(p112, make_label(p112, q(1, 2))), q(1));
}

TEST(EnumerateSectors, Examples) {
  auto phases = [](const std::vector<SectorInfo>& sectors) {
    std::vector<Rational> out;
    for (const auto& s : sectors) out.push_back(s.label.c);
    return out;
  };
  EXPECT_EQ(phases(enumerate_sectors(wp({1, 2, 2, 3, 3, 3}))),
            (std::vector<Rational>{q(0), q(1, 3), q(1, 2), q(2, 3)}));
  EXPECT_EQ(phases(enumerate_sectors(wp({1, 1, 2}))), (std::vector<Rational>{q(0), q(1, 2)}));
  EXPECT_EQ(phases(enumerate_sectors(wp({1, 1, -1}, Chamber::negative))), (std::vector<Rational>{q(0)}));
  EXPECT_TRUE(enumerate_sectors(wp({1, 1, 2}, Chamber::negative)).empty());
}

TEST(EnumerateSectors, MatchesBruteForce) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    ValidatedDatum d = testdata::random_datum(rng, 5, 9, i % 3 == 0 ? 4 : 0);
    const auto sectors = enumerate_sectors(d);
    std::set<SectorLabel> got;
    for (const auto& s : sectors) got.insert(s.label);
    EXPECT_EQ(got.size(), sectors.size()) << "duplicates";
    EXPECT_EQ(got, brute_force_sectors(d));
    ASSERT_FALSE(sectors.empty());
    EXPECT_TRUE(is_identity(sectors.front().label));
    for (std::size_t k = 2; k < sectors.size(); ++k) EXPECT_LT(sectors[k - 1].label, sectors[k].label);
  }
}

TEST(EnumerateSectors, MixedSignsMatchBruteForce) {
  for (auto w : std::vector<std::vector<std::int64_t>>{{1, 1, -1}, {2, 3, -6}, {1, -2, 3, -4}, {-2, -3}})
    for (Chamber chamber : {Chamber::positive, Chamber::negative}) {
      ValidatedDatum d = wp(w, chamber);
      std::set<SectorLabel> got;
      for (const auto& s : enumerate_sectors(d)) got.insert(s.label);
      EXPECT_EQ(got, brute_force_sectors(d));
    }
}

TEST(SectorInfo, Examples) {
  ValidatedDatum d = wp({1, 2, 2, 3, 3, 3});
  SectorInfo info = sector_info(d, make_label(d, q(1, 3)));
  EXPECT_EQ(info.fixed_set, (IndexSet{3, 4, 5}));
  EXPECT_EQ(info.shift, q(5, 3));
  EXPECT_EQ(info.dim, 2);
  // frac(w_j / 6) != 0 for every weight in (1,2,2,3,3,3).
  EXPECT_EQ(kind_of([&] { sector_info(d, make_label(d, q(1, 6))); }), ErrorKind::EmptySector);
  ValidatedDatum p11 = wp({1, 1});
  SectorInfo id = sector_info(p11, identity(p11));
  EXPECT_EQ(id.fixed_set, (IndexSet{0, 1}));
  EXPECT_EQ(id.shift, q(0));
  EXPECT_EQ(id.dim, 1);
}

TEST(SectorInvariants, InverseComplement) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 80; ++i) {
    ValidatedDatum d = testdata::random_datum(rng, 6, 9, i % 4 == 0 ? 5 : 0);
    const auto sectors = enumerate_sectors(d);
    std::set<SectorLabel> labels;
    for (const auto& s : sectors) labels.insert(s.label);
    for (const auto& s : sectors) {
      const SectorLabel inv = inverse(d, s.label);
      EXPECT_TRUE(labels.count(inv));
      EXPECT_EQ(fixed_set(d, inv), s.fixed_set);
      for (std::size_t j = 0; j < d.n(); ++j) {
        const Rational sum = theta(d, s.label, j) + theta(d, inv, j);
        const bool fixed = std::binary_search(s.fixed_set.begin(), s.fixed_set.end(), j);
        EXPECT_EQ(sum, fixed ? q(0) : q(1));
        EXPECT_EQ(s.thetas[j].is_zero(), fixed);
      }
      EXPECT_EQ(s.shift + degree_shift(d, inv), q(static_cast<std::int64_t>(d.n() - s.fixed_set.size())));
    }
  }
}

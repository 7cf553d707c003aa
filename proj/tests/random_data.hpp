#pragma once

#include <numeric>
#include <optional>
#include <random>

#include "crcoh/error.hpp"
#include "crcoh/quotient.hpp"

namespace crcoh::testdata {

/// Random effective all-positive datum: n <= max_n, weights in [1, max_weight],
/// optionally one finite cyclic factor of order <= max_order.
inline ValidatedDatum random_datum(std::mt19937_64& rng, std::size_t max_n, std::int64_t max_weight,
                                   std::int64_t max_order = 0) {
  std::uniform_int_distribution<std::size_t> n_dist(1, max_n);
  std::uniform_int_distribution<std::int64_t> w_dist(1, max_weight);
  while (true) {
    QuotientDatum d;
    d.n = n_dist(rng);
    for (std::size_t j = 0; j < d.n; ++j) d.weights.push_back(w_dist(rng));
    if (max_order >= 2) {
      std::uniform_int_distribution<std::int64_t> o_dist(2, max_order);
      FiniteCyclicFactor f;
      f.order = o_dist(rng);
      std::uniform_int_distribution<std::int64_t> p_dist(0, f.order - 1);
      for (std::size_t j = 0; j < d.n; ++j) f.phases.push_back(p_dist(rng));
      d.finite.push_back(f);
    }
    try {
      return validate_datum(d);
    } catch (const Error&) {
      // ineffective: draw again
    }
  }
}

}  // namespace crcoh::testdata

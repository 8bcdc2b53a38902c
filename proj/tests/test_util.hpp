#pragma once

#include <random>
#include <vector>

#include "primediv/int_polynomial.hpp"
#include "primediv/mod_poly.hpp"

namespace testutil {

inline primediv::IntPolynomial random_poly(std::mt19937_64& rng, int max_deg, long coeff_bound,
                                           bool monic = false) {
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  std::uniform_int_distribution<long> coeff_dist(-coeff_bound, coeff_bound);
  int d = deg_dist(rng);
  std::vector<primediv::Int> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = coeff_dist(rng);
  if (monic) {
    c.back() = 1;
  } else {
    while (c.back() == 0) c.back() = coeff_dist(rng);
  }
  return primediv::IntPolynomial(std::move(c));
}

inline primediv::ModPoly random_mod_poly(std::mt19937_64& rng, uint64_t p, int deg) {
  std::vector<uint64_t> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = rng() % p;
  while (c.back() == 0) c.back() = rng() % p;
  return primediv::ModPoly{p, std::move(c)};
}

}  // namespace testutil

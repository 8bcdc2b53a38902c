#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "primediv/mod_poly.hpp"
#include "test_util.hpp"

using namespace primediv;

namespace {

// Independent root counter: try every residue.
uint64_t brute_roots(const ModPoly& f) {
  uint64_t n = 0;
  for (uint64_t x = 0; x < f.p; ++x)
    if (fp::eval(f, x) == 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("coefficientwise reduction") {
  CHECK(fp::reduce_mod_p(IntPolynomial{1, -3, 1}, 5) == fp::from_coeffs(5, {1, 2, 1}));
  CHECK(fp::reduce_mod_p(IntPolynomial{1, 1}, 2) == fp::from_coeffs(2, {1, 1}));
  CHECK(fp::reduce_mod_p(IntPolynomial{-12, 0, 1}, 2) == fp::from_coeffs(2, {0, 0, 1}));
}

TEST_CASE("root counts on small fields") {
  CHECK(fp::count_roots(fp::reduce_mod_p(IntPolynomial{1, 0, 1}, 5)) == 2);
  CHECK(fp::count_roots(fp::reduce_mod_p(IntPolynomial{1, 0, 1}, 7)) == 0);
  CHECK(fp::has_root(fp::reduce_mod_p(IntPolynomial{1, 0, 1}, 5)));
  CHECK_FALSE(fp::has_root(fp::reduce_mod_p(IntPolynomial{1, 0, 1}, 7)));
  // Over F_2, T^2 + 1 = (T + 1)^2 has the single root 1.
  ModPoly f = fp::reduce_mod_p(IntPolynomial{1, 0, 1}, 2);
  CHECK(brute_roots(f) == 1);
  CHECK(fp::count_roots(f) == 1);
}

TEST_CASE("root counting agrees with brute force") {
  std::mt19937_64 rng(2024);
  auto primes = std::vector<uint64_t>{2, 3, 5, 7, 11, 13, 31, 97, 199, 499};
  for (uint64_t p : primes) {
    for (int trial = 0; trial < 20; ++trial) {
      ModPoly f = testutil::random_mod_poly(rng, p, 1 + static_cast<int>(rng() % 6));
      CHECK(fp::count_roots(f) == brute_roots(f));
    }
  }
}

TEST_CASE("factorization of named polynomials") {
  // The quartic with multiplicative order 4 roots splits in two quadratics
  // mod 19 because 19 has order 2 modulo 5.
  ModPoly f = fp::reduce_mod_p(IntPolynomial{1, 1, 1, 1, 1}, 19);
  auto fac = fp::factor(f);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first.degree() == 2);
  CHECK(fac[1].first.degree() == 2);
  CHECK(fp::is_irreducible(fac[0].first));
  CHECK(fp::is_irreducible(fac[1].first));

  auto lin = fp::factor(fp::reduce_mod_p(IntPolynomial{-1, 0, 1}, 5));
  REQUIRE(lin.size() == 2);
  CHECK(lin[0].first == fp::from_coeffs(5, {1, 1}));   // T + 1 = T - 4
  CHECK(lin[1].first == fp::from_coeffs(5, {4, 1}));   // T + 4 = T - 1

  auto irr = fp::factor(fp::reduce_mod_p(IntPolynomial{1, 1, 1}, 2));
  REQUIRE(irr.size() == 1);
  CHECK(irr[0].first.degree() == 2);
  CHECK(irr[0].second == 1);
}

TEST_CASE("factorization round trips with irreducible parts") {
  std::mt19937_64 rng(77);
  auto primes = std::vector<uint64_t>{2, 3, 5, 13, 101, 65537};
  for (int trial = 0; trial < 60; ++trial) {
    uint64_t p = primes[rng() % primes.size()];
    ModPoly f = testutil::random_mod_poly(rng, p, 1 + static_cast<int>(rng() % 7));
    auto fac = fp::factor(f);
    ModPoly prod = fp::constant(p, f.leading());
    for (auto& [g, m] : fac) {
      CHECK(fp::is_irreducible(g));
      for (int i = 0; i < m; ++i) prod = fp::mul(prod, g);
    }
    CHECK(prod == f);
  }
}

TEST_CASE("repeated factors are recovered with multiplicity") {
  uint64_t p = 5;
  ModPoly g = fp::from_coeffs(p, {1, 1});
  ModPoly h = fp::from_coeffs(p, {2, 0, 1});  // T^2 + 2, irreducible mod 5
  ModPoly f = fp::mul(fp::mul(g, g), fp::mul(fp::mul(h, h), h));
  auto fac = fp::factor(f);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first == g);
  CHECK(fac[0].second == 2);
  CHECK(fac[1].first == h);
  CHECK(fac[1].second == 3);
}

TEST_CASE("p-th power inputs factor correctly") {
  // (T + 1)^2 mod 2 has zero derivative; the p-th root path must handle it.
  ModPoly f = fp::from_coeffs(2, {1, 0, 1});
  auto fac = fp::factor(f);
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].first == fp::from_coeffs(2, {1, 1}));
  CHECK(fac[0].second == 2);
}

TEST_CASE("splitting field residue degree") {
  CHECK(residue_field_degree(IntPolynomial{-2, 0, 1}, 7) == 1);  // 3^2 = 2 mod 7
  CHECK(residue_field_degree(IntPolynomial{1, 0, 1}, 7) == 2);
  CHECK(residue_field_degree(IntPolynomial{-2, -1, 1}, 5) == 1);  // (T+1)(T-2), good p
  CHECK_THROWS_AS(residue_field_degree(IntPolynomial{1, -3, 1}, 5), Error);  // 5 | disc
}

TEST_CASE("powmod with huge exponents stays consistent") {
  ModPoly f = fp::from_coeffs(101, {3, 0, 7, 1});
  Int e("123456789123456789");
  ModPoly a = fp::powmod(fp::variable(101), e, f);
  // split the exponent: T^e = (T^(e/2))^2 * T^(e mod 2)
  Int half = e / 2;
  ModPoly b = fp::powmod(fp::variable(101), half, f);
  b = fp::rem(fp::mul(b, b), f);
  b = fp::rem(fp::mul(b, fp::variable(101)), f);
  CHECK(a == b);
}

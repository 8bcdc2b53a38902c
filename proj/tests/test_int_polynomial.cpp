#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "primediv/int_polynomial.hpp"
#include "test_util.hpp"

using namespace primediv;

TEST_CASE("ring operations match hand expansions") {
  IntPolynomial a{1, 1};   // T + 1
  IntPolynomial b{-2, 1};  // T - 2
  CHECK(a * b == IntPolynomial{-2, -1, 1});

  IntPolynomial p{3, 0, -1, 7};
  CHECK(p + IntPolynomial::zero() == p);

  IntPolynomial q{1, 1, 1};
  IntPolynomial r{-1, 1};
  CHECK(q * r == IntPolynomial{-1, 0, 0, 1});  // telescoping to T^3 - 1

  CHECK((p - p).is_zero());
  CHECK(p * IntPolynomial::zero() == IntPolynomial::zero());
}

TEST_CASE("evaluation is exact Horner") {
  CHECK(IntPolynomial{1, 1, 1}.evaluate(1) == 3);
  CHECK(IntPolynomial{-2, 1}.evaluate(0) == -2);
  CHECK(IntPolynomial{1, 0, -1, 0, 1}.evaluate(2) == 13);
}

TEST_CASE("power composition") {
  CHECK(IntPolynomial{1, 1}.compose_power(2) == IntPolynomial{1, 0, 1});
  IntPolynomial p{4, -3, 0, 1};
  CHECK(p.compose_power(1) == p);
  CHECK(IntPolynomial{1, -1, 1}.compose_power(3) == IntPolynomial{1, 0, 0, -1, 0, 0, 1});
}

TEST_CASE("derivatives") {
  CHECK(IntPolynomial{1, -3, 1}.derivative() == IntPolynomial{-3, 2});
  CHECK(IntPolynomial{42}.derivative().is_zero());
  CHECK(IntPolynomial{1, 0, 0, -1, 0, 0, 1}.derivative() ==
        IntPolynomial{0, 0, -3, 0, 0, 6});
}

TEST_CASE("discriminants of named polynomials") {
  CHECK(discriminant(IntPolynomial{1, -3, 1}) == 5);
  CHECK(discriminant(IntPolynomial{1, 0, 1}) == -4);

  // Roots 1, 2, 3: the discriminant is the product of squared differences.
  Int oracle = 1;
  long roots[] = {1, 2, 3};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) oracle *= Int(roots[i] - roots[j]) * Int(roots[i] - roots[j]);
  CHECK(oracle == 4);
  CHECK(discriminant(IntPolynomial{-6, 11, -6, 1}) == oracle);
}

TEST_CASE("gcd over the rationals") {
  CHECK(rational_gcd(IntPolynomial{0, 0, 1}, IntPolynomial{0, 2}) == IntPolynomial{0, 1});
  IntPolynomial p{1, -3, 1};
  CHECK(rational_gcd(p, p.derivative()) == IntPolynomial{1});
  CHECK(rational_gcd(IntPolynomial{-1, 0, 0, 0, 1}, IntPolynomial{-1, 0, 1}) ==
        IntPolynomial{-1, 0, 1});
}

TEST_CASE("resultant vanishes exactly on common factors") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    IntPolynomial a = testutil::random_poly(rng, 8, 50);
    IntPolynomial b = testutil::random_poly(rng, 8, 50);
    bool common = rational_gcd(a, b).degree() >= 1;
    CHECK((resultant(a, b) == 0) == common);
  }
}

TEST_CASE("resultant is multiplicative and evaluates linear factors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    IntPolynomial a = testutil::random_poly(rng, 4, 9);
    IntPolynomial b = testutil::random_poly(rng, 4, 9);
    IntPolynomial c = testutil::random_poly(rng, 3, 9);
    CHECK(resultant(a * b, c) == resultant(a, c) * resultant(b, c));
    std::uniform_int_distribution<long> root_dist(-10, 10);
    long r = root_dist(rng);
    IntPolynomial lin{-r, 1};
    CHECK(resultant(lin, c) == c.evaluate(r));
  }
}

TEST_CASE("separability is detected by the discriminant") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    IntPolynomial p = testutil::random_poly(rng, 6, 20, /*monic=*/true);
    if (p.degree() < 1) continue;
    bool separable = rational_gcd(p, p.derivative()).degree() == 0;
    CHECK((discriminant(p) != 0) == separable);
  }
}

TEST_CASE("composition identities") {
  std::mt19937_64 rng(9001);
  for (int trial = 0; trial < 50; ++trial) {
    IntPolynomial p = testutil::random_poly(rng, 5, 30);
    uint64_t j = 1 + rng() % 4, k = 1 + rng() % 4;
    CHECK(p.compose_power(j).compose_power(k) == p.compose_power(j * k));
    std::uniform_int_distribution<long> xd(-8, 8);
    Int x = xd(rng);
    CHECK(p.compose_power(k).evaluate(x) == p.evaluate(pow_int(x, static_cast<unsigned long>(k))));
  }
}

TEST_CASE("monic long division round trips") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    IntPolynomial d = testutil::random_poly(rng, 4, 12, /*monic=*/true);
    if (d.degree() < 1) continue;
    IntPolynomial n = testutil::random_poly(rng, 8, 40);
    auto [q, r] = divrem_monic(n, d);
    CHECK(q * d + r == n);
    CHECK(r.degree() < d.degree());
  }
}

TEST_CASE("rational polynomial normalization") {
  RationalPolynomial r{IntPolynomial{2, 4}, 6};
  r.normalize();
  CHECK(r.numerator == IntPolynomial{1, 2});
  CHECK(r.denominator == 3);

  auto m = RationalPolynomial::monic_scale(IntPolynomial{3, -6});
  CHECK(m.numerator == IntPolynomial{-1, 2});
  CHECK(m.denominator == 2);  // sign moved into the numerator
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "primediv/factor_q.hpp"
#include "primediv/parse.hpp"
#include "test_util.hpp"

using namespace primediv;

TEST_CASE("expression forms") {
  CHECK(parse_poly("T^3 - 2*T + 1") == IntPolynomial{1, -2, 0, 1});
  CHECK(parse_poly("[1, -2, 0, 1]") == IntPolynomial{1, -2, 0, 1});
  CHECK(parse_poly("T - T").is_zero());
  CHECK(parse_poly("(T+1)*(T-2)") == IntPolynomial{-2, -1, 1});
  CHECK(parse_poly("(T+1)(T-2)") == IntPolynomial{-2, -1, 1});
  CHECK(parse_poly("2T^2 + 1") == IntPolynomial{1, 0, 2});
  CHECK(parse_poly("-T + 1") == IntPolynomial{1, -1});
  CHECK(parse_poly("T + -2") == IntPolynomial{-2, 1});
  CHECK(parse_poly("(T+1)^3") == IntPolynomial{1, 3, 3, 1});
  CHECK(parse_poly("T^0") == IntPolynomial{1});
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("  7 ") == IntPolynomial{7});
  CHECK(parse_poly("123456789012345678901234567890") ==
        IntPolynomial::constant(Int("123456789012345678901234567890")));
}

TEST_CASE("zero polynomial flows into the precondition gate") {
  IntPolynomial z = parse_poly("T - T");
  CHECK_THROWS_AS(check_preconditions(z), Error);
}

TEST_CASE("syntax errors carry offsets and expectations") {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      parse_poly(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("T^^2") == 2);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("T +") == 3);
  CHECK(offset_of("(T+1") == 4);
  CHECK(offset_of("[1, 2") == 5);
  CHECK(offset_of("T 5") == 2);   // juxtaposed integer is not a product
  CHECK(offset_of("x + 1") == 0);
}

TEST_CASE("huge exponents are a limit error, not a syntax error") {
  CHECK_THROWS_AS(parse_poly("T^2000000"), Error);
  CHECK_THROWS_AS(parse_poly("(T+1)^999999"), Error);
}

TEST_CASE("arbitrary byte strings never crash the parser") {
  std::mt19937_64 rng(0xf22u);
  const std::string alphabet = "T0123456789+-*^()[], x";
  for (int trial = 0; trial < 3000; ++trial) {
    std::string s;
    std::size_t len = rng() % 24;
    for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[rng() % alphabet.size()]);
    try {
      IntPolynomial p = parse_poly(s);
      CHECK(parse_poly(to_string(p)) == p);  // anything accepted must round-trip
    } catch (const ParseError&) {
    } catch (const Error&) {
    }
  }
}

TEST_CASE("printing and reparsing is the identity") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    IntPolynomial p = testutil::random_poly(rng, 9, 1000);
    CHECK(parse_poly(to_string(p)) == p);
    PolyExpr e = parse_expr(to_string(p));
    CHECK(parse_poly(to_string(e.parsed)) == e.parsed);
  }
  CHECK(parse_poly(to_string(IntPolynomial::zero())).is_zero());
  CHECK(to_string(IntPolynomial{1, 0, -1, 0, 1}) == "T^4 - T^2 + 1");
  CHECK(to_string(IntPolynomial{-2, -1, 1}) == "T^2 - T - 2");
  CHECK(to_string(IntPolynomial{0, -1}) == "-T");
}

#pragma once

// Umbrella header: certified exponents k for which infinitely many primes
// divide P(T) but not P(T^k), plus the empirical density machinery.

#include "primediv/certify.hpp"
#include "primediv/classify.hpp"
#include "primediv/constants.hpp"
#include "primediv/errors.hpp"
#include "primediv/ext_field.hpp"
#include "primediv/factor_q.hpp"
#include "primediv/int_polynomial.hpp"
#include "primediv/integer.hpp"
#include "primediv/mod_poly.hpp"
#include "primediv/parse.hpp"
#include "primediv/verify.hpp"

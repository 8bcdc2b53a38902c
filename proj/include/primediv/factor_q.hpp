#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "primediv/errors.hpp"
#include "primediv/int_polynomial.hpp"
#include "primediv/mod_poly.hpp"

namespace primediv {

/// Validates the standing hypotheses on an input polynomial: monic of degree
/// >= 1, separable, nonzero at 0 and at 1. Throws the named violation.
inline void check_preconditions(const IntPolynomial& P) {
  if (P.is_zero() || P.degree() < 1 || !P.is_monic())
    throw Error(Errc::NotMonic, "input must be monic of degree >= 1");
  if (P.evaluate(0) == 0) throw Error(Errc::ZeroAtZero, "P(0) must be nonzero");
  if (P.evaluate(1) == 0) throw Error(Errc::ZeroAtOne, "P(1) must be nonzero");
  if (rational_gcd(P, P.derivative()).degree() != 0)
    throw Error(Errc::NotSeparable, "P must have no repeated roots");
}

/// Monic irreducible factors over Q; multiplicities are all 1 for separable
/// input, so only the factor list is kept.
struct FactorizationQ {
  std::vector<IntPolynomial> factors;
};

// ---------------------------------------------------------------------------
// Hensel lifting (quadratic, factor tree)
// ---------------------------------------------------------------------------

namespace hensel_detail {

inline IntPolynomial mod_reduce(const IntPolynomial& a, const Int& m) {
  std::vector<Int> c(a.coeffs());
  for (auto& v : c) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  }
  return IntPolynomial(std::move(c));
}

// Long division by a monic divisor with coefficients taken mod m.
inline std::pair<IntPolynomial, IntPolynomial> mod_divrem_monic(const IntPolynomial& n,
                                                                const IntPolynomial& d,
                                                                const Int& m) {
  auto [q, r] = divrem_monic(mod_reduce(n, m), d);
  return {mod_reduce(q, m), mod_reduce(r, m)};
}

// One quadratic step: from a factorization and Bezout pair mod m to mod m^2.
struct LiftState {
  IntPolynomial g, h, s, t;
};

inline void hensel_step(const IntPolynomial& f, LiftState& st, const Int& m) {
  Int m2 = m * m;
  IntPolynomial e = mod_reduce(f - st.g * st.h, m2);
  auto [q, r] = mod_divrem_monic(st.s * e, st.h, m2);
  IntPolynomial g2 = mod_reduce(st.g + st.t * e + q * st.g, m2);
  IntPolynomial h2 = mod_reduce(st.h + r, m2);
  if (g2.degree() != st.g.degree() || h2.degree() != st.h.degree())
    throw Error(Errc::Internal, "hensel step changed factor degrees");
  IntPolynomial b = mod_reduce(st.s * g2 + st.t * h2 - IntPolynomial{1}, m2);
  auto [c, d] = mod_divrem_monic(st.s * b, h2, m2);
  st.s = mod_reduce(st.s - d, m2);
  st.t = mod_reduce(st.t - st.t * b - c * g2, m2);
  st.g = std::move(g2);
  st.h = std::move(h2);
}

inline IntPolynomial lift_coeffs(const ModPoly& a) {
  std::vector<Int> c(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = Int(static_cast<unsigned long>(a.c[i]));
  return IntPolynomial(std::move(c));
}

// Extended Euclid over F_p: s*g + t*h = 1 with deg s < deg h, deg t < deg g.
inline std::pair<IntPolynomial, IntPolynomial> bezout_mod_p(const ModPoly& g, const ModPoly& h) {
  const uint64_t p = g.p;
  ModPoly r0 = g, r1 = h;
  ModPoly s0 = fp::constant(p, 1), s1 = fp::zero(p);
  while (!r1.is_zero()) {
    auto [q, r] = fp::divrem(r0, r1);
    ModPoly s2 = fp::sub(s0, fp::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0)
    throw Error(Errc::NotCoprime, "factors are not coprime mod p");
  uint64_t inv = inverse_mod(r0.c[0], p);
  ModPoly u = fp::mul_scalar(s0, inv);          // u*g = 1 mod h (up to h-multiples)
  ModPoly s = fp::rem(u, h);                    // deg s < deg h
  // t = (1 - s*g) / h exactly mod p
  ModPoly num = fp::sub(fp::constant(p, 1), fp::mul(s, g));
  ModPoly t = fp::divide_exact(num, h);
  return {lift_coeffs(s), lift_coeffs(t)};
}

inline void lift_tree(const IntPolynomial& f, const std::vector<ModPoly>& factors,
                      std::size_t lo, std::size_t hi, uint64_t p, const Int& target,
                      std::vector<IntPolynomial>& out) {
  if (hi - lo == 1) {
    out.push_back(mod_reduce(f, target));
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  ModPoly g0 = fp::constant(p, 1), h0 = fp::constant(p, 1);
  for (std::size_t i = lo; i < mid; ++i) g0 = fp::mul(g0, factors[i]);
  for (std::size_t i = mid; i < hi; ++i) h0 = fp::mul(h0, factors[i]);
  auto [s0, t0] = bezout_mod_p(g0, h0);
  LiftState st{lift_coeffs(g0), lift_coeffs(h0), s0, t0};
  Int m = static_cast<unsigned long>(p);
  while (m < target) {
    hensel_step(f, st, m);
    m = m * m;
  }
  lift_tree(mod_reduce(st.g, target), factors, lo, mid, p, target, out);
  lift_tree(mod_reduce(st.h, target), factors, mid, hi, p, target, out);
}

}  // namespace hensel_detail

/// Lifts a coprime factorization of f mod p to one mod p^e (coefficients in
/// [0, p^e)). The input factors must be monic with product congruent to f.
inline std::vector<IntPolynomial> hensel_lift(const IntPolynomial& f,
                                              const std::vector<IntPolynomial>& factors_mod_p,
                                              uint64_t p, unsigned e) {
  if (e == 0) throw Error(Errc::InvalidArgument, "target exponent must be >= 1");
  std::vector<ModPoly> fac;
  fac.reserve(factors_mod_p.size());
  ModPoly prod = fp::constant(p, 1);
  for (const auto& g : factors_mod_p) {
    ModPoly gm = fp::reduce_mod_p(g, p);
    if (gm.is_zero() || gm.leading() != 1)
      throw Error(Errc::InvalidArgument, "factors must be monic mod p");
    prod = fp::mul(prod, gm);
    fac.push_back(std::move(gm));
  }
  if (!(prod == fp::reduce_mod_p(f, p)))
    throw Error(Errc::InvalidArgument, "product of factors must equal f mod p");
  Int target = pow_int(Int(static_cast<unsigned long>(p)), e);
  std::vector<IntPolynomial> out;
  hensel_detail::lift_tree(hensel_detail::mod_reduce(f, target), fac, 0, fac.size(), p, target,
                           out);
  return out;
}

// ---------------------------------------------------------------------------
// Factorization over Q (Zassenhaus)
// ---------------------------------------------------------------------------

namespace zass_detail {

// Coefficients into the balanced range (-m/2, m/2].
inline IntPolynomial balanced(const IntPolynomial& a, const Int& m) {
  Int half = m / 2;
  std::vector<Int> c(a.coeffs());
  for (auto& v : c) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
  }
  return IntPolynomial(std::move(c));
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace zass_detail

/// Monic separable P into monic irreducible factors over Q: factor mod a good
/// prime, lift past the coefficient bound, then search factor subsets
/// (smallest first) for true divisors.
inline FactorizationQ factor_over_q(const IntPolynomial& P, uint64_t seed = kDefaultSeed) {
  if (!P.is_monic() || P.degree() < 1)
    throw Error(Errc::NotMonic, "factorization needs a monic polynomial of degree >= 1");
  if (P.degree() == 1) return {{P}};
  Int disc = discriminant(P);
  if (disc == 0) throw Error(Errc::NotSeparable, "input has repeated roots");

  // Smallest odd prime not dividing the discriminant keeps the reduction
  // squarefree and the run deterministic.
  uint64_t p = 3;
  while (mpz_divisible_ui_p(disc.get_mpz_t(), p)) p = next_prime_above(p);

  auto mod_factors = fp::factor(fp::reduce_mod_p(P, p), seed);
  if (mod_factors.size() == 1) return {{P}};

  // Coefficient bound for any monic factor, then the smallest p-power
  // exceeding twice it.
  Int norm2 = 0;
  for (const auto& a : P.coeffs()) norm2 += a * a;
  Int root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Int bound = (Int(1) << P.degree()) * root;
  unsigned e = 1;
  Int pe = static_cast<unsigned long>(p);
  while (pe <= 2 * bound) {
    pe *= static_cast<unsigned long>(p);
    ++e;
  }

  std::vector<IntPolynomial> base;
  base.reserve(mod_factors.size());
  for (auto& [g, m] : mod_factors) base.push_back(hensel_detail::lift_coeffs(g));
  std::vector<IntPolynomial> lifted = hensel_lift(P, base, p, e);

  std::vector<IntPolynomial> result;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  IntPolynomial remaining = P;

  std::size_t s = 1;
  while (2 * s <= alive.size()) {
    std::vector<std::size_t> comb(s);
    for (std::size_t i = 0; i < s; ++i) comb[i] = i;
    bool found = false;
    do {
      if (2 * s == alive.size() && comb[0] != 0) break;  // complements repeat
      IntPolynomial cand{1};
      for (std::size_t i : comb) cand = zass_detail::balanced(cand * lifted[alive[i]], pe);
      cand = zass_detail::balanced(cand, pe);
      const Int& c0 = cand.constant_term();
      const Int& r0 = remaining.constant_term();
      if (c0 != 0 && r0 != 0 && !mpz_divisible_p(r0.get_mpz_t(), c0.get_mpz_t())) continue;
      IntPolynomial quot;
      if (try_divide_exact(remaining, cand, &quot)) {
        result.push_back(cand);
        remaining = std::move(quot);
        std::vector<std::size_t> next_alive;
        for (std::size_t i = 0; i < alive.size(); ++i)
          if (std::find(comb.begin(), comb.end(), i) == comb.end())
            next_alive.push_back(alive[i]);
        alive = std::move(next_alive);
        found = true;
        break;
      }
    } while (zass_detail::next_combination(comb, alive.size()));
    if (!found) ++s;
  }
  if (remaining.degree() > 0) result.push_back(remaining);

  std::sort(result.begin(), result.end(), [](const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs().size(); i-- > 0;)
      if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    return false;
  });
  return {std::move(result)};
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and totient preimages
// ---------------------------------------------------------------------------

/// n-th cyclotomic polynomial by iterated exact division of T^n - 1.
inline IntPolynomial cyclotomic_poly(uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cyclotomic index must be >= 1");
  std::vector<uint64_t> divisors;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divisors.push_back(d);
      if (d != n / d) divisors.push_back(n / d);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  std::map<uint64_t, IntPolynomial> memo;
  for (uint64_t d : divisors) {
    IntPolynomial q = IntPolynomial::monomial(1, d) - IntPolynomial{1};
    for (uint64_t e : divisors) {
      if (e >= d) break;
      if (d % e == 0) {
        auto [quot, rem] = divrem_monic(q, memo[e]);
        if (!rem.is_zero()) throw Error(Errc::Internal, "cyclotomic division not exact");
        q = std::move(quot);
      }
    }
    memo[d] = std::move(q);
  }
  return memo[n];
}

/// All n with phi(n) = d. Every prime factor p of such an n has p - 1 | d,
/// which bounds n by d * prod p/(p-1) over those primes.
inline std::vector<uint64_t> inverse_totient(uint64_t d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "totient preimage of 0");
  if (d == 1) return {1, 2};
  if (d % 2 == 1) return {};
  Int num = static_cast<unsigned long>(d), den = 1;
  for (uint64_t e = 1; e <= d; ++e) {
    if (d % e == 0 && is_prime(e + 1)) {
      num *= static_cast<unsigned long>(e + 1);
      den *= static_cast<unsigned long>(e);
    }
  }
  Int bound_int = num / den + 1;
  auto bound = static_cast<uint64_t>(bound_int.get_ui());
  std::vector<uint64_t> out;
  for (uint64_t n = 1; n <= bound; ++n)
    if (euler_phi(n) == d) out.push_back(n);
  return out;
}

}  // namespace primediv

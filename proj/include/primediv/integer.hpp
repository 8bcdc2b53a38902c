#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "primediv/errors.hpp"

namespace primediv {

using Int = mpz_class;
using Rat = mpq_class;

// Fixed default seed for every randomized step, so certificates and
// factorizations are reproducible run to run.
inline constexpr uint64_t kDefaultSeed = 1729;

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
  return splitmix64(seed ^ splitmix64(salt));
}

// ---------------------------------------------------------------------------
// 64-bit modular arithmetic (moduli up to 2^63; intermediates in 128 bits)
// ---------------------------------------------------------------------------

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
  uint64_t s = a + b;
  if (s >= m || s < a) s -= m;
  return s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
  if (m == 1) return 0;
  uint64_t r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Extended Euclid; requires gcd(a, m) = 1.
inline uint64_t inverse_mod(uint64_t a, uint64_t m) {
  int64_t t = 0, nt = 1;
  int64_t r = static_cast<int64_t>(m), nr = static_cast<int64_t>(a % m);
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw Error(Errc::Internal, "inverse of non-unit");
  if (t < 0) t += static_cast<int64_t>(m);
  return static_cast<uint64_t>(t);
}

// ---------------------------------------------------------------------------
// Primality and factorization
// ---------------------------------------------------------------------------

inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // Deterministic Miller-Rabin for 64-bit inputs with these bases.
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline uint64_t next_prime_above(uint64_t n) {
  uint64_t c = n + 1;
  if (c <= 2) return 2;
  if (c % 2 == 0) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

// Primes below 100000, built once.
inline const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    const uint32_t limit = 100000;
    std::vector<bool> comp(limit, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i < limit; ++i) {
      if (!comp[i]) {
        out.push_back(i);
        for (uint64_t j = static_cast<uint64_t>(i) * i; j < limit; j += i) comp[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

namespace detail {

inline uint64_t pollard_brent(uint64_t n, uint64_t seed) {
  if (n % 2 == 0) return 2;
  for (uint64_t salt = 0;; ++salt) {
    uint64_t c = splitmix64(seed + salt) % (n - 1) + 1;
    uint64_t x = splitmix64(seed + salt + 0x1234) % n;
    uint64_t y = x, d = 1;
    uint64_t q = 1;
    const uint64_t m = 128;
    uint64_t ys = y;
    for (uint64_t r = 1; d == 1; r <<= 1) {
      x = y;
      for (uint64_t i = 0; i < r; ++i) y = addmod(mulmod(y, y, n), c, n);
      for (uint64_t k = 0; k < r && d == 1; k += m) {
        ys = y;
        for (uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = addmod(mulmod(y, y, n), c, n);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
    }
    if (d == n) {
      // Backtrack one step at a time.
      do {
        ys = addmod(mulmod(ys, ys, n), c, n);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

}  // namespace detail

inline void factorize_into(uint64_t n, std::vector<std::pair<uint64_t, int>>& out) {
  if (n < 2) return;
  if (is_prime(n)) {
    out.emplace_back(n, 1);
    return;
  }
  uint64_t d = detail::pollard_brent(n, kDefaultSeed);
  factorize_into(d, out);
  factorize_into(n / d, out);
}

inline std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> flat;
  for (uint32_t p : small_primes()) {
    if (static_cast<uint64_t>(p) * p > n) break;
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      flat.emplace_back(p, e);
    }
  }
  if (n > 1) factorize_into(n, flat);
  std::sort(flat.begin(), flat.end());
  std::vector<std::pair<uint64_t, int>> out;
  for (auto& [p, e] : flat) {
    if (!out.empty() && out.back().first == p)
      out.back().second += e;
    else
      out.emplace_back(p, e);
  }
  return out;
}

inline uint64_t euler_phi(uint64_t n) {
  if (n == 0) return 0;
  uint64_t phi = n;
  for (auto& [p, e] : factorize(n)) phi -= phi / p;
  return phi;
}

inline int valuation(uint64_t n, uint64_t p) {
  int v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

// Largest divisor of k all of whose prime factors divide n (empty product 1).
// Multiplying n by this divisor scales the totient exactly by it.
inline uint64_t supported_part(uint64_t k, uint64_t n) {
  uint64_t h = 1;
  for (auto& [p, e] : factorize(k)) {
    if (n % p == 0) {
      for (int i = 0; i < e; ++i) h *= p;
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Arbitrary-precision helpers
// ---------------------------------------------------------------------------

inline bool fits_u64(const Int& n) {
  return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64 &&
         mpz_fits_ulong_p(n.get_mpz_t());
}

inline uint64_t to_u64(const Int& n) {
  if (!fits_u64(n)) throw Error(Errc::LimitExceeded, "value exceeds 64-bit range");
  return mpz_get_ui(n.get_mpz_t());
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool is_probable_prime(const Int& n) {
  if (fits_u64(n)) return is_prime(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

namespace detail {

inline Int pollard_rho_mpz(const Int& n, uint64_t seed) {
  if (n % 2 == 0) return 2;
  for (uint64_t salt = 1;; ++salt) {
    Int c = static_cast<unsigned long>(splitmix64(seed + salt) % 1000 + 1);
    Int x = static_cast<unsigned long>(splitmix64(seed + 2 * salt) % 1000 + 2);
    Int y = x, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = abs(x - y);
      if (diff == 0) break;
      d = gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

inline void factorize_into_mpz(Int n, std::vector<Int>& out, uint64_t seed) {
  if (n <= 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = pollard_rho_mpz(n, seed);
  factorize_into_mpz(d, out, seed + 1);
  factorize_into_mpz(n / d, out, seed + 1);
}

}  // namespace detail

// Prime factorization of |n|, ascending.
inline std::vector<std::pair<Int, int>> factorize(const Int& value) {
  Int n = abs(value);
  std::vector<Int> flat;
  if (n > 1) {
    for (uint32_t p : small_primes()) {
      if (n == 1) break;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        n /= p;
        flat.push_back(p);
      }
    }
    detail::factorize_into_mpz(n, flat, kDefaultSeed);
  }
  std::sort(flat.begin(), flat.end());
  std::vector<std::pair<Int, int>> out;
  for (auto& p : flat) {
    if (!out.empty() && out.back().first == p)
      out.back().second += 1;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

inline Int largest_prime_factor(const Int& n) {
  auto f = factorize(n);
  if (f.empty()) throw Error(Errc::InvalidArgument, "no prime factor of a unit");
  return f.back().first;
}

inline Int smallest_prime_factor(const Int& n) {
  Int a = abs(n);
  if (a <= 1) throw Error(Errc::InvalidArgument, "no prime factor of a unit");
  for (uint32_t p : small_primes()) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), p)) return p;
    if (static_cast<uint64_t>(p) * p > a) break;
  }
  if (is_probable_prime(a)) return a;
  auto f = factorize(a);
  return f.front().first;
}

inline int valuation(const Int& value, const Int& p) {
  if (value == 0) throw Error(Errc::InvalidArgument, "valuation of zero");
  Int n = value, q, r;
  int v = 0;
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    n = q;
    ++v;
  }
  return v;
}

}  // namespace primediv

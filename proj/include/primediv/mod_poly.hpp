#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "primediv/errors.hpp"
#include "primediv/int_polynomial.hpp"
#include "primediv/integer.hpp"

namespace primediv {

/// Polynomial over F_p, residues in [0, p), ascending order, normalized.
struct ModPoly {
  uint64_t p = 0;
  std::vector<uint64_t> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }

  uint64_t coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
  uint64_t leading() const { return c.back(); }

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p == b.p && a.c == b.c; }
  friend bool operator<(const ModPoly& a, const ModPoly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (std::size_t i = a.c.size(); i-- > 0;)
      if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
  }
};

namespace fp {

inline ModPoly zero(uint64_t p) { return ModPoly{p, {}}; }

inline ModPoly constant(uint64_t p, uint64_t v) {
  ModPoly r{p, {v % p}};
  r.normalize();
  return r;
}

inline ModPoly variable(uint64_t p) { return ModPoly{p, {0, 1 % p}}; }

inline ModPoly from_coeffs(uint64_t p, std::vector<uint64_t> c) {
  for (auto& v : c) v %= p;
  ModPoly r{p, std::move(c)};
  r.normalize();
  return r;
}

/// Coefficientwise reduction of an integer polynomial mod p.
inline ModPoly reduce_mod_p(const IntPolynomial& a, uint64_t p) {
  if (p < 2) throw Error(Errc::BadPrime, "modulus must be at least 2");
  std::vector<uint64_t> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = mpz_fdiv_ui(a.coeff(i).get_mpz_t(), p);
  ModPoly r{p, std::move(c)};
  r.normalize();
  return r;
}

inline ModPoly add(const ModPoly& a, const ModPoly& b) {
  ModPoly r{a.p, std::vector<uint64_t>(std::max(a.c.size(), b.c.size()), 0)};
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = addmod(a.coeff(i), b.coeff(i), a.p);
  r.normalize();
  return r;
}

inline ModPoly sub(const ModPoly& a, const ModPoly& b) {
  ModPoly r{a.p, std::vector<uint64_t>(std::max(a.c.size(), b.c.size()), 0)};
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = submod(a.coeff(i), b.coeff(i), a.p);
  r.normalize();
  return r;
}

inline ModPoly mul_scalar(const ModPoly& a, uint64_t s) {
  s %= a.p;
  ModPoly r = a;
  for (auto& v : r.c) v = mulmod(v, s, a.p);
  r.normalize();
  return r;
}

inline ModPoly mul(const ModPoly& a, const ModPoly& b) {
  if (a.is_zero() || b.is_zero()) return zero(a.p);
  const uint64_t p = a.p;
  std::vector<uint64_t> r(a.c.size() + b.c.size() - 1, 0);
  if (p < (1ULL << 32)) {
    // Products fit in 64 bits; accumulate in 128 and reduce once per cell.
    for (std::size_t i = 0; i < r.size(); ++i) {
      unsigned __int128 acc = 0;
      std::size_t lo = i >= b.c.size() ? i - b.c.size() + 1 : 0;
      std::size_t hi = std::min(i, a.c.size() - 1);
      for (std::size_t j = lo; j <= hi; ++j)
        acc += static_cast<unsigned __int128>(a.c[j]) * b.c[i - j];
      r[i] = static_cast<uint64_t>(acc % p);
    }
  } else {
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j)
        r[i + j] = addmod(r[i + j], mulmod(a.c[i], b.c[j], p), p);
    }
  }
  ModPoly out{p, std::move(r)};
  out.normalize();
  return out;
}

inline ModPoly make_monic(const ModPoly& a) {
  if (a.is_zero() || a.leading() == 1) return a;
  return mul_scalar(a, inverse_mod(a.leading(), a.p));
}

inline std::pair<ModPoly, ModPoly> divrem(const ModPoly& n, const ModPoly& d) {
  if (d.is_zero()) throw Error(Errc::InvalidArgument, "division by zero polynomial");
  const uint64_t p = n.p;
  int dn = n.degree(), dd = d.degree();
  if (dn < dd) return {zero(p), n};
  uint64_t lead_inv = inverse_mod(d.leading(), p);
  std::vector<uint64_t> rem = n.c;
  std::vector<uint64_t> quot(static_cast<std::size_t>(dn - dd) + 1, 0);
  for (int i = dn; i >= dd; --i) {
    uint64_t c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    uint64_t q = mulmod(c, lead_inv, p);
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) {
      auto idx = static_cast<std::size_t>(i - dd + j);
      rem[idx] = submod(rem[idx], mulmod(q, d.coeff(static_cast<std::size_t>(j)), p), p);
    }
  }
  ModPoly R{p, std::move(rem)};
  R.normalize();
  ModPoly Q{p, std::move(quot)};
  Q.normalize();
  return {std::move(Q), std::move(R)};
}

inline ModPoly rem(const ModPoly& n, const ModPoly& d) { return divrem(n, d).second; }

inline ModPoly divide_exact(const ModPoly& n, const ModPoly& d) {
  auto [q, r] = divrem(n, d);
  if (!r.is_zero()) throw Error(Errc::Internal, "inexact polynomial division");
  return q;
}

/// Monic gcd.
inline ModPoly gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : make_monic(a);
}

inline uint64_t eval(const ModPoly& a, uint64_t x) {
  uint64_t acc = 0;
  x %= a.p;
  for (std::size_t i = a.c.size(); i-- > 0;) acc = addmod(mulmod(acc, x, a.p), a.c[i], a.p);
  return acc;
}

/// base^e mod m, square-and-multiply over the bits of an mpz exponent.
inline ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m) {
  if (sgn(e) < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  ModPoly result = constant(m.p, 1);
  ModPoly b = rem(base, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), m);
  }
  return result;
}

inline ModPoly powmod(const ModPoly& base, uint64_t e, const ModPoly& m) {
  return powmod(base, Int(static_cast<unsigned long>(e)), m);
}

// ---------------------------------------------------------------------------
// Root counting
// ---------------------------------------------------------------------------

/// Number of distinct roots of f in F_p: deg gcd(T^p - T, f).
inline uint64_t count_roots(const ModPoly& f) {
  if (f.is_zero()) throw Error(Errc::InvalidArgument, "root count of zero polynomial");
  if (f.degree() == 0) return 0;
  const uint64_t p = f.p;
  ModPoly tp = powmod(variable(p), p, f);
  ModPoly g = gcd(sub(tp, variable(p)), f);
  return static_cast<uint64_t>(g.degree());
}

inline bool has_root(const ModPoly& f) { return count_roots(f) > 0; }

// ---------------------------------------------------------------------------
// Irreducibility and factorization
// ---------------------------------------------------------------------------

/// Rabin test: f of degree n is irreducible iff T^(p^n) = T mod f and
/// gcd(T^(p^(n/q)) - T, f) = 1 for every prime q | n.
inline bool is_irreducible(const ModPoly& f_in) {
  if (f_in.is_zero() || f_in.degree() == 0) return false;
  ModPoly f = make_monic(f_in);
  int n = f.degree();
  if (n == 1) return true;
  const uint64_t p = f.p;
  std::vector<ModPoly> frob(static_cast<std::size_t>(n) + 1);
  frob[0] = rem(variable(p), f);
  for (int i = 1; i <= n; ++i) frob[static_cast<std::size_t>(i)] = powmod(frob[static_cast<std::size_t>(i - 1)], p, f);
  if (!(frob[static_cast<std::size_t>(n)] == rem(variable(p), f))) return false;
  for (auto& [q, e] : factorize(static_cast<uint64_t>(n))) {
    int i = n / static_cast<int>(q);
    ModPoly g = gcd(sub(frob[static_cast<std::size_t>(i)], variable(p)), f);
    if (g.degree() != 0) return false;
  }
  return true;
}

namespace detail {

// p-th root of f when f' = 0: in characteristic p such an f is a p-th power
// and the root keeps every p-th coefficient.
inline ModPoly pth_root(const ModPoly& f) {
  const auto p = static_cast<std::size_t>(f.p);
  std::vector<uint64_t> c;
  for (std::size_t i = 0; i < f.c.size(); i += p) c.push_back(f.c[i]);
  ModPoly r{f.p, std::move(c)};
  r.normalize();
  return r;
}

inline ModPoly derivative(const ModPoly& f) {
  if (f.c.size() <= 1) return zero(f.p);
  std::vector<uint64_t> c(f.c.size() - 1);
  for (std::size_t i = 1; i < f.c.size(); ++i) c[i - 1] = mulmod(f.c[i], i % f.p, f.p);
  ModPoly r{f.p, std::move(c)};
  r.normalize();
  return r;
}

inline ModPoly random_poly(uint64_t p, int max_deg, std::mt19937_64& rng) {
  std::vector<uint64_t> c(static_cast<std::size_t>(max_deg) + 1);
  for (auto& v : c) v = rng() % p;
  ModPoly r{p, std::move(c)};
  r.normalize();
  return r;
}

}  // namespace detail

/// Squarefree decomposition of a monic f: list of (squarefree g, multiplicity).
inline std::vector<std::pair<ModPoly, int>> squarefree_decomposition(const ModPoly& f_in) {
  ModPoly f = make_monic(f_in);
  std::vector<std::pair<ModPoly, int>> out;
  if (f.degree() < 1) return out;
  ModPoly fp = detail::derivative(f);
  if (fp.is_zero()) {
    for (auto& [g, m] : squarefree_decomposition(detail::pth_root(f)))
      out.emplace_back(g, m * static_cast<int>(f.p));
    return out;
  }
  ModPoly c = gcd(f, fp);
  ModPoly w = divide_exact(f, c);
  int i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd(w, c);
    ModPoly z = divide_exact(w, y);
    if (z.degree() > 0) out.emplace_back(make_monic(z), i);
    w = std::move(y);
    c = divide_exact(c, w);
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_decomposition(detail::pth_root(c)))
      out.emplace_back(g, m * static_cast<int>(f.p));
  }
  return out;
}

/// Distinct-degree split of a monic squarefree f: list of (product, degree).
inline std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f_in) {
  ModPoly f = make_monic(f_in);
  std::vector<std::pair<ModPoly, int>> out;
  const uint64_t p = f.p;
  ModPoly u = rem(variable(p), f);
  int d = 0;
  while (f.degree() > 0 && 2 * (d + 1) <= f.degree()) {
    ++d;
    u = powmod(u, p, f);
    ModPoly g = gcd(sub(u, variable(p)), f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = divide_exact(f, g);
      u = rem(u, f);
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

namespace detail {

// Equal-degree splitting of a monic squarefree product of degree-d
// irreducibles. Odd p uses Cantor-Zassenhaus; p = 2 uses trace maps over a
// deterministic sequence of polynomials.
inline void equal_degree_split(const ModPoly& f, int d, std::mt19937_64& rng,
                               std::vector<ModPoly>& out) {
  if (f.degree() == d) {
    out.push_back(make_monic(f));
    return;
  }
  const uint64_t p = f.p;
  ModPoly g = zero(p);
  if (p == 2) {
    for (uint64_t j = 1; g.degree() <= 0 || g.degree() >= f.degree(); ++j) {
      ModPoly u = powmod(variable(p), j, f);
      ModPoly tr = u;
      ModPoly sq = u;
      for (int i = 1; i < d; ++i) {
        sq = rem(mul(sq, sq), f);
        tr = add(tr, sq);
      }
      g = gcd(tr, f);
    }
  } else {
    Int e = (pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
    while (g.degree() <= 0 || g.degree() >= f.degree()) {
      ModPoly h = random_poly(p, f.degree() - 1, rng);
      if (h.degree() < 1) continue;
      ModPoly w = powmod(h, e, f);
      g = gcd(sub(w, constant(p, 1)), f);
    }
  }
  equal_degree_split(g, d, rng, out);
  equal_degree_split(divide_exact(f, g), d, rng, out);
}

}  // namespace detail

/// Full factorization into monic irreducibles with multiplicities, sorted
/// canonically; deterministic for a fixed seed.
inline std::vector<std::pair<ModPoly, int>> factor(const ModPoly& f, uint64_t seed = kDefaultSeed) {
  if (f.is_zero()) throw Error(Errc::InvalidArgument, "factor of zero polynomial");
  std::vector<std::pair<ModPoly, int>> out;
  if (f.degree() < 1) return out;
  std::mt19937_64 rng(mix_seed(seed, f.p));
  for (auto& [sqf, mult] : squarefree_decomposition(f)) {
    for (auto& [prod, d] : distinct_degree(sqf)) {
      std::vector<ModPoly> irr;
      detail::equal_degree_split(prod, d, rng, irr);
      for (auto& h : irr) out.emplace_back(std::move(h), mult);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

/// lcm of the degrees of the irreducible factors of f.
inline uint64_t factor_degree_lcm(const ModPoly& f, uint64_t seed = kDefaultSeed) {
  uint64_t l = 1;
  for (auto& [g, m] : factor(f, seed)) l = std::lcm(l, static_cast<uint64_t>(g.degree()));
  return l;
}

inline std::string to_string(const ModPoly& f, const std::string& var = "T") {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    uint64_t c = f.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace fp

/// Residue degree of the splitting field of P at an unramified prime p:
/// lcm of the degrees of the irreducible factors of P mod p.
inline uint64_t residue_field_degree(const IntPolynomial& P, uint64_t p,
                                     uint64_t seed = kDefaultSeed) {
  Int disc = discriminant(P);
  if (mpz_divisible_ui_p(disc.get_mpz_t(), p))
    throw Error(Errc::BadPrime, "prime divides the discriminant");
  return fp::factor_degree_lcm(fp::reduce_mod_p(P, p), seed);
}

}  // namespace primediv

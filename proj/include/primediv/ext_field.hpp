#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "primediv/errors.hpp"
#include "primediv/mod_poly.hpp"

namespace primediv {

/// Element of F_{p^f}: a residue polynomial of degree < f over F_p.
struct ExtFieldElement {
  ModPoly value;

  friend bool operator==(const ExtFieldElement& a, const ExtFieldElement& b) {
    return a.value == b.value;
  }
  friend bool operator<(const ExtFieldElement& a, const ExtFieldElement& b) {
    return a.value < b.value;
  }
};

/// The field F_{p^f} presented as F_p[x]/(g) for a monic irreducible g of
/// degree f. The defining polynomial is found by seeded random search, so a
/// fixed seed reproduces the same field (and the same witness data) each run.
class ExtField {
 public:
  ExtField(uint64_t p, uint64_t f, uint64_t seed = kDefaultSeed) : p_(p), f_(f) {
    if (f == 0) throw Error(Errc::InvalidArgument, "extension degree must be positive");
    if (f == 1) {
      modulus_ = fp::variable(p);
    } else {
      std::mt19937_64 rng(mix_seed(seed, (p << 8) ^ f));
      while (true) {
        std::vector<uint64_t> c(f + 1);
        for (std::size_t i = 0; i < f; ++i) c[i] = rng() % p;
        c[f] = 1;
        ModPoly cand{p, std::move(c)};
        if (fp::is_irreducible(cand)) {
          modulus_ = std::move(cand);
          break;
        }
      }
    }
    q_ = pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(f));
  }

  uint64_t characteristic() const { return p_; }
  uint64_t extension_degree() const { return f_; }
  const ModPoly& modulus() const { return modulus_; }
  const Int& order() const { return q_; }

  ExtFieldElement zero() const { return {fp::zero(p_)}; }
  ExtFieldElement one() const { return {fp::constant(p_, 1)}; }
  ExtFieldElement from_residue(uint64_t v) const { return {fp::constant(p_, v % p_)}; }
  ExtFieldElement from_poly(const ModPoly& a) const { return {fp::rem(a, modulus_)}; }

  bool is_zero(const ExtFieldElement& a) const { return a.value.is_zero(); }

  ExtFieldElement add(const ExtFieldElement& a, const ExtFieldElement& b) const {
    return {fp::add(a.value, b.value)};
  }
  ExtFieldElement sub(const ExtFieldElement& a, const ExtFieldElement& b) const {
    return {fp::sub(a.value, b.value)};
  }
  ExtFieldElement neg(const ExtFieldElement& a) const {
    return {fp::sub(fp::zero(p_), a.value)};
  }
  ExtFieldElement mul(const ExtFieldElement& a, const ExtFieldElement& b) const {
    return {fp::rem(fp::mul(a.value, b.value), modulus_)};
  }

  ExtFieldElement pow(const ExtFieldElement& a, const Int& e) const {
    return {fp::powmod(a.value, e, modulus_)};
  }

  ExtFieldElement inv(const ExtFieldElement& a) const {
    if (a.value.is_zero()) throw Error(Errc::InvalidArgument, "inverse of zero");
    return pow(a, q_ - 2);
  }

  ExtFieldElement random_element(std::mt19937_64& rng) const {
    std::vector<uint64_t> c(f_);
    for (auto& v : c) v = rng() % p_;
    ModPoly m{p_, std::move(c)};
    m.normalize();
    return {std::move(m)};
  }

  std::string describe(const ExtFieldElement& a) const {
    if (f_ == 1) return a.value.is_zero() ? "0" : std::to_string(a.value.c[0]);
    return fp::to_string(a.value, "x");
  }

  std::string describe_field() const {
    std::ostringstream os;
    os << "F_" << p_;
    if (f_ > 1) os << "^" << f_ << " = F_" << p_ << "[x]/(" << fp::to_string(modulus_, "x") << ")";
    return os.str();
  }

 private:
  uint64_t p_ = 0;
  uint64_t f_ = 0;
  ModPoly modulus_;
  Int q_;
};

/// True iff x is a k-th power in F_q*, decided by x^((q-1)/k) = 1.
/// Requires x != 0 and k | q - 1.
inline bool kth_power_residue(const ExtField& K, const ExtFieldElement& x, uint64_t k) {
  if (K.is_zero(x)) throw Error(Errc::InvalidArgument, "power residue test on zero");
  Int qm1 = K.order() - 1;
  if (k == 0 || !mpz_divisible_ui_p(qm1.get_mpz_t(), k))
    throw Error(Errc::BadOrder, "k does not divide q - 1");
  Int e = qm1 / static_cast<unsigned long>(k);
  return K.pow(x, e) == K.one();
}

// ---------------------------------------------------------------------------
// Polynomials with coefficients in an extension field (root extraction only)
// ---------------------------------------------------------------------------

namespace extpoly {

using Poly = std::vector<ExtFieldElement>;  // ascending, normalized

inline void normalize(const ExtField& K, Poly& a) {
  while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly sub(const ExtField& K, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = K.sub(r[i], b[i]);
  normalize(K, r);
  return r;
}

inline Poly add(const ExtField& K, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
  normalize(K, r);
  return r;
}

inline Poly mul(const ExtField& K, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (K.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  }
  normalize(K, r);
  return r;
}

inline Poly make_monic(const ExtField& K, Poly a) {
  normalize(K, a);
  if (a.empty()) return a;
  ExtFieldElement inv = K.inv(a.back());
  for (auto& v : a) v = K.mul(v, inv);
  return a;
}

inline Poly rem(const ExtField& K, Poly n, const Poly& d) {
  if (d.empty()) throw Error(Errc::InvalidArgument, "division by zero polynomial");
  ExtFieldElement lead_inv = K.inv(d.back());
  normalize(K, n);
  while (degree(n) >= degree(d)) {
    ExtFieldElement q = K.mul(n.back(), lead_inv);
    std::size_t off = n.size() - d.size();
    for (std::size_t j = 0; j < d.size(); ++j)
      n[off + j] = K.sub(n[off + j], K.mul(q, d[j]));
    normalize(K, n);
  }
  return n;
}

inline Poly gcd(const ExtField& K, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = rem(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(K, std::move(a));
}

inline Poly powmod(const ExtField& K, const Poly& base, const Int& e, const Poly& m) {
  Poly result{K.one()};
  if (e == 0) return result;
  Poly b = rem(K, base, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(K, mul(K, result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(K, mul(K, result, b), m);
  }
  return result;
}

inline ExtFieldElement eval(const ExtField& K, const Poly& a, const ExtFieldElement& x) {
  ExtFieldElement acc = K.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = K.add(K.mul(acc, x), a[i]);
  return acc;
}

// Splits a monic product of linear factors over K into its roots.
inline void collect_roots(const ExtField& K, const Poly& g, std::mt19937_64& rng,
                          std::vector<ExtFieldElement>& out) {
  if (g.size() <= 1) return;
  if (degree(g) == 1) {
    out.push_back(K.neg(g[0]));  // monic: root = -constant
    return;
  }
  const Int& q = K.order();
  Poly split;
  while (true) {
    Poly w;
    if (K.characteristic() == 2) {
      // Trace map to F_2 of a*Y, evaluated modulo g.
      ExtFieldElement a = K.random_element(rng);
      if (K.is_zero(a)) continue;
      Poly u{K.zero(), a};
      Poly tr = rem(K, u, g);
      Poly sq = tr;
      std::size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2) - 1;  // q = 2^bits
      for (std::size_t i = 1; i < bits; ++i) {
        sq = rem(K, mul(K, sq, sq), g);
        tr = add(K, tr, sq);
      }
      w = tr;
    } else {
      ExtFieldElement a = K.random_element(rng);
      Poly shift{a, K.one()};  // Y + a
      Poly t = powmod(K, shift, (q - 1) / 2, g);
      w = sub(K, t, Poly{K.one()});
    }
    split = gcd(K, w, g);
    if (degree(split) > 0 && degree(split) < degree(g)) break;
  }
  collect_roots(K, split, rng, out);
  Poly quot = g;
  // quot = g / split via repeated remainder-free division
  {
    // long division (split is monic)
    Poly n = g;
    Poly q_out(n.size() - split.size() + 1, K.zero());
    while (degree(n) >= degree(split)) {
      ExtFieldElement c = n.back();
      std::size_t off = n.size() - split.size();
      q_out[off] = c;
      for (std::size_t j = 0; j < split.size(); ++j)
        n[off + j] = K.sub(n[off + j], K.mul(c, split[j]));
      normalize(K, n);
    }
    quot = q_out;
    normalize(K, quot);
  }
  collect_roots(K, quot, rng, out);
}

}  // namespace extpoly

/// All roots of the integer polynomial m inside F_{p^f}. Every irreducible
/// factor degree of m mod p must divide f, otherwise the roots do not embed.
inline std::vector<ExtFieldElement> roots_in_extension(const ExtField& K, const IntPolynomial& m,
                                                       uint64_t seed = kDefaultSeed) {
  const uint64_t p = K.characteristic();
  ModPoly mp = fp::reduce_mod_p(m, p);
  if (mp.is_zero()) throw Error(Errc::InvalidArgument, "polynomial vanishes mod p");
  std::vector<ExtFieldElement> roots;
  std::mt19937_64 rng(mix_seed(seed, (p << 20) ^ K.extension_degree()));
  for (auto& [h, mult] : fp::factor(mp, seed)) {
    auto d = static_cast<uint64_t>(h.degree());
    if (K.extension_degree() % d != 0)
      throw Error(Errc::NoEmbedding,
                  "factor of degree " + std::to_string(d) + " does not embed in degree " +
                      std::to_string(K.extension_degree()));
    extpoly::Poly hK(h.c.size());
    for (std::size_t i = 0; i < h.c.size(); ++i) hK[i] = K.from_residue(h.c[i]);
    extpoly::collect_roots(K, hK, rng, roots);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace primediv

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "primediv/classify.hpp"
#include "primediv/constants.hpp"
#include "primediv/errors.hpp"
#include "primediv/ext_field.hpp"

namespace primediv {

// Dispatch on the root inventory: all roots torsion, none torsion, or mixed.
enum class Route { AllUnity, NoUnity, Mixed };

inline const char* route_name(Route r) {
  switch (r) {
    case Route::AllUnity: return "all_unity";
    case Route::NoUnity: return "no_unity";
    case Route::Mixed: return "mixed";
  }
  return "unknown";
}

/// Evidence that one root class is not a k-th power in the splitting field:
/// a prime p = 1 (mod k), unramified, where some embedded root image fails
/// the k-th power residue test in F_{p^f}. By the prime-degree binomial
/// criterion this certifies T^k - t irreducible over the splitting field.
struct PowerWitness {
  IntPolynomial class_poly;
  uint64_t k = 0;
  uint64_t witness_prime = 0;
  uint64_t residue_degree = 1;
  std::vector<uint64_t> image_coeffs;  // image in F_p[x]/(field_modulus)
  ModPoly field_modulus;
  std::string image_text;
  std::string field_text;
};

/// Candidate exponent k, the route that justifies it, and all evidence.
/// An empty caveat list means every hypothesis of the route is certified.
struct KCertificate {
  Int k;
  Route route = Route::AllUnity;
  ConstantsReport constants;
  std::optional<uint64_t> A0;  // exponent applied to torsion primes
  std::optional<Int> p0;       // certified prime factor (Mixed / NoUnity)
  std::optional<Rat> f2_upper;
  std::vector<PowerWitness> witnesses;
  std::vector<std::string> caveats;
};

struct SuggestOptions {
  unsigned count = 3;
  uint64_t witness_limit = 1'000'000;
  uint64_t seed = kDefaultSeed;
};

/// Scans primes p = 1 (mod k), p not dividing k*disc(P), embeds the class
/// roots into the residue field F_{p^f} of the splitting field and looks for
/// a k-th non-residue image. A witness is sound: were the class root a k-th
/// power in the splitting field, every embedded image would be a residue.
/// Absence of a witness within the limit proves nothing.
inline std::optional<PowerWitness> certify_non_kth_power(const RootClass& cls, uint64_t k,
                                                         const IntPolynomial& P,
                                                         uint64_t search_limit,
                                                         uint64_t seed = kDefaultSeed) {
  if (!is_prime(k)) throw Error(Errc::NotPrime, "witness search needs a prime k");
  if (cls.kind == RootKind::RootOfUnity)
    throw Error(Errc::InvalidArgument, "torsion classes are handled by the exponent route");
  Int disc = discriminant(P);
  for (uint64_t p = k + 1; p <= search_limit; p += k) {
    if (!is_prime(p)) continue;
    if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
    uint64_t f = fp::factor_degree_lcm(fp::reduce_mod_p(P, p), seed);
    ExtField K(p, f, seed);
    for (const auto& root : roots_in_extension(K, cls.minimal_polynomial, seed)) {
      if (!kth_power_residue(K, root, k)) {
        PowerWitness w;
        w.class_poly = cls.minimal_polynomial;
        w.k = k;
        w.witness_prime = p;
        w.residue_degree = f;
        w.image_coeffs = root.value.c;
        w.field_modulus = K.modulus();
        w.image_text = K.describe(root);
        w.field_text = K.describe_field();
        return w;
      }
    }
  }
  return std::nullopt;
}

/// Re-runs every check a stored witness asserts; used to replay certificates.
inline bool replay_witness(const PowerWitness& w, const IntPolynomial& P,
                           uint64_t seed = kDefaultSeed) {
  if (!is_prime(w.k) || !is_prime(w.witness_prime)) return false;
  if (w.witness_prime % w.k != 1) return false;
  Int disc = discriminant(P);
  if (mpz_divisible_ui_p(disc.get_mpz_t(), w.witness_prime)) return false;
  uint64_t f = fp::factor_degree_lcm(fp::reduce_mod_p(P, w.witness_prime), seed);
  if (f != w.residue_degree) return false;
  ExtField K(w.witness_prime, f, seed);
  if (!(K.modulus() == w.field_modulus)) return false;
  ModPoly img{w.witness_prime, w.image_coeffs};
  img.normalize();
  ExtFieldElement x{img};
  // The image must be a root of the class polynomial and a k-th non-residue.
  ExtFieldElement acc = K.zero();
  for (std::size_t i = w.class_poly.coeffs().size(); i-- > 0;) {
    acc = K.mul(acc, x);
    uint64_t c = mpz_fdiv_ui(w.class_poly.coeff(i).get_mpz_t(), w.witness_prime);
    acc = K.add(acc, K.from_residue(c));
  }
  if (!K.is_zero(acc)) return false;
  return !kth_power_residue(K, x, w.k);
}

// ---------------------------------------------------------------------------
// Failure predictions
// ---------------------------------------------------------------------------

/// Exact set description of exponents k that provably fail: k fails whenever
/// gcd(k, m) = 1 for some listed modulus m. Empty list = no prediction.
struct FailurePrediction {
  std::vector<uint64_t> coprime_moduli;
  std::string description;
};

inline bool predicted_to_fail(const FailurePrediction& pred, const Int& k) {
  for (uint64_t m : pred.coprime_moduli) {
    if (gcd(k, Int(static_cast<unsigned long>(m))) == 1) return true;
  }
  return false;
}

/// Two provable failure families: if every root is torsion, any k coprime to
/// the lcm of the orders fails; if some torsion root is rational, any k
/// coprime to its order fails. (With P(1) != 0 the only rational torsion
/// root is -1, order 2.)
inline FailurePrediction predict_failures(const IntPolynomial& P, uint64_t seed = kDefaultSeed) {
  auto report = classify_roots(P, seed);
  FailurePrediction pred;
  if (report.r2 + report.r3 == 0) {
    uint64_t m = 1;
    for (const auto& cls : report.classes) m = std::lcm(m, cls.order);
    pred.coprime_moduli.push_back(m);
    pred.description = "fails for every k coprime to " + std::to_string(m);
    return pred;
  }
  std::set<uint64_t> rational_orders;
  for (const auto& cls : report.classes) {
    if (cls.kind == RootKind::RootOfUnity && cls.count == 1) rational_orders.insert(cls.order);
  }
  if (!rational_orders.empty()) {
    std::string desc = "fails for every k coprime to any of:";
    for (uint64_t m : rational_orders) {
      pred.coprime_moduli.push_back(m);
      desc += " " + std::to_string(m);
    }
    pred.description = desc;
  }
  return pred;
}

// ---------------------------------------------------------------------------
// Candidate generation
// ---------------------------------------------------------------------------

namespace certify_detail {

// Prime sets obtainable by choosing one prime from the order's support for
// each root of every torsion class (a class of c roots can spread over up to
// c distinct primes of its support).
inline std::vector<std::set<uint64_t>> torsion_prime_choices(const ClassificationReport& report) {
  std::vector<std::vector<std::set<uint64_t>>> per_class;
  for (const auto& cls : report.classes) {
    if (cls.kind != RootKind::RootOfUnity) continue;
    std::vector<uint64_t> primes;
    for (auto& [q, e] : factorize(cls.order)) primes.push_back(q);
    std::vector<std::set<uint64_t>> subsets;
    uint64_t full = (1ULL << primes.size()) - 1;
    for (uint64_t mask = 1; mask <= full; ++mask) {
      if (static_cast<unsigned>(__builtin_popcountll(mask)) > cls.count) continue;
      std::set<uint64_t> s;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask & (1ULL << i)) s.insert(primes[i]);
      subsets.push_back(std::move(s));
    }
    per_class.push_back(std::move(subsets));
  }
  std::set<std::set<uint64_t>> unions;
  std::vector<std::size_t> pick(per_class.size(), 0);
  while (true) {
    std::set<uint64_t> u;
    for (std::size_t i = 0; i < per_class.size(); ++i)
      u.insert(per_class[i][pick[i]].begin(), per_class[i][pick[i]].end());
    unions.insert(std::move(u));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < per_class[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
    if (per_class.empty()) break;
  }
  return {unions.begin(), unions.end()};
}

inline Int torsion_k(const std::set<uint64_t>& primes, uint64_t A) {
  Int k = 1;
  for (uint64_t q : primes) k *= pow_int(Int(static_cast<unsigned long>(q)), A);
  return k;
}

inline std::string poly_label(const IntPolynomial& m) { return to_string(m); }

}  // namespace certify_detail

/// Candidate exponents with machine-checkable evidence, dispatched on the
/// root inventory. Candidates that miss a witness are emitted with an
/// explicit caveat rather than dropped.
inline std::vector<KCertificate> suggest_k(const IntPolynomial& P, SuggestOptions opt = {}) {
  if (P.degree() == 0) throw Error(Errc::OnlyTrivial, "constant polynomial");
  check_preconditions(P);
  auto report = classify_roots(P, opt.seed);
  ConstantsReport constants = compute_constants(P, report);
  std::vector<KCertificate> out;

  if (report.r2 + report.r3 == 0) {
    uint64_t A = *constants.A0;
    std::vector<Int> ks;
    for (const auto& q : certify_detail::torsion_prime_choices(report))
      ks.push_back(certify_detail::torsion_k(q, A));
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (const auto& k : ks) {
      if (out.size() >= opt.count) break;
      KCertificate cert;
      cert.k = k;
      cert.route = Route::AllUnity;
      cert.constants = constants;
      cert.A0 = A;
      out.push_back(std::move(cert));
    }
    return out;
  }

  if (report.r1 == 0) {
    const Int& c = *constants.c;
    if (!fits_u64(c)) throw Error(Errc::LimitExceeded, "candidate threshold exceeds 64 bits");
    uint64_t k = to_u64(c);
    if (k < 2) k = 2;
    if (!is_prime(k)) k = next_prime_above(k);
    while (out.size() < opt.count) {
      KCertificate cert;
      cert.k = static_cast<unsigned long>(k);
      cert.route = Route::NoUnity;
      cert.constants = constants;
      cert.p0 = Int(static_cast<unsigned long>(k));
      for (const auto& cls : report.classes) {
        if (cls.kind != RootKind::UnitNotRootOfUnity) continue;
        auto w = certify_non_kth_power(cls, k, P, opt.witness_limit, opt.seed);
        if (w) {
          cert.witnesses.push_back(std::move(*w));
        } else {
          cert.caveats.push_back("no k-th power witness for class " +
                                 certify_detail::poly_label(cls.minimal_polynomial) +
                                 " below " + std::to_string(opt.witness_limit));
        }
      }
      out.push_back(std::move(cert));
      k = next_prime_above(k);
    }
    return out;
  }

  // Mixed inventory: find the smallest certified prime p0 >= c, then pair it
  // with exponents on the torsion primes.
  const Int& c = *constants.c;
  if (!fits_u64(c)) throw Error(Errc::LimitExceeded, "candidate threshold exceeds 64 bits");
  uint64_t p0 = to_u64(c);
  if (p0 < 2) p0 = 2;
  if (!is_prime(p0)) p0 = next_prime_above(p0);
  std::vector<PowerWitness> p0_witnesses;
  std::vector<std::string> p0_caveats;
  const int kMaxP0Candidates = 25;
  uint64_t chosen_p0 = 0;
  for (int attempt = 0; attempt < kMaxP0Candidates; ++attempt) {
    std::vector<PowerWitness> ws;
    bool all = true;
    for (const auto& cls : report.classes) {
      if (cls.kind != RootKind::UnitNotRootOfUnity) continue;
      auto w = certify_non_kth_power(cls, p0, P, opt.witness_limit, opt.seed);
      if (w)
        ws.push_back(std::move(*w));
      else
        all = false;
    }
    if (all) {
      chosen_p0 = p0;
      p0_witnesses = std::move(ws);
      break;
    }
    p0 = next_prime_above(p0);
  }
  if (chosen_p0 == 0) {
    chosen_p0 = to_u64(c);
    if (!is_prime(chosen_p0)) chosen_p0 = next_prime_above(chosen_p0);
    p0_caveats.push_back("some unit class has no witness at p0 = " + std::to_string(chosen_p0) +
                         " below " + std::to_string(opt.witness_limit));
  }
  auto mixed = f2_bound_and_A0p0(report, Int(static_cast<unsigned long>(chosen_p0)), constants.k0,
                                 constants.v_upper.value_or(Int(0)), true);
  uint64_t A = mixed.A0_at_p0;
  std::vector<Int> ks;
  for (const auto& q : certify_detail::torsion_prime_choices(report)) {
    Int k = certify_detail::torsion_k(q, A);
    Int p0i = static_cast<unsigned long>(chosen_p0);
    k = lcm(k, p0i);
    ks.push_back(k);
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  for (const auto& k : ks) {
    if (out.size() >= opt.count) break;
    KCertificate cert;
    cert.k = k;
    cert.route = Route::Mixed;
    cert.constants = constants;
    cert.A0 = A;
    cert.p0 = Int(static_cast<unsigned long>(chosen_p0));
    cert.f2_upper = mixed.f2_upper;
    cert.witnesses = p0_witnesses;
    cert.caveats = p0_caveats;
    out.push_back(std::move(cert));
  }
  return out;
}

/// Assessment of a user-chosen exponent: emits the certificate for k with an
/// empty caveat list only when k is provably covered by one of the routes.
inline KCertificate assess_k(const IntPolynomial& P, uint64_t k, SuggestOptions opt = {}) {
  if (k == 0) throw Error(Errc::InvalidArgument, "k must be positive");
  if (P.degree() == 0) throw Error(Errc::OnlyTrivial, "constant polynomial");
  check_preconditions(P);
  auto report = classify_roots(P, opt.seed);
  ConstantsReport constants = compute_constants(P, report);
  KCertificate cert;
  cert.k = static_cast<unsigned long>(k);
  cert.constants = constants;

  auto pred = predict_failures(P, opt.seed);
  if (predicted_to_fail(pred, cert.k))
    cert.caveats.push_back("k is in the predicted failure set: " + pred.description);

  auto factor_list = factorize(k);

  if (report.r2 + report.r3 == 0) {
    cert.route = Route::AllUnity;
    uint64_t A = *constants.A0;
    cert.A0 = A;
    for (const auto& cls : report.classes) {
      if (cls.kind != RootKind::RootOfUnity) continue;
      bool covered = false;
      for (auto& [q, e] : factorize(cls.order)) {
        if (valuation(k, q) >= static_cast<int>(A)) {
          covered = true;
          break;
        }
      }
      if (!covered)
        cert.caveats.push_back("no prime of the order of class " +
                               certify_detail::poly_label(cls.minimal_polynomial) +
                               " divides k to exponent " + std::to_string(A));
    }
    return cert;
  }

  // A prime factor q >= c of k can carry the non-torsion classes: unit
  // classes need a witness at q; non-unit classes are covered by q > V.
  const Int& c = *constants.c;
  uint64_t q_ok = 0;
  std::vector<PowerWitness> ws;
  std::vector<std::string> unit_caveats;
  bool have_factor_above_c = false;
  for (auto& [q, e] : factor_list) {
    if (Int(static_cast<unsigned long>(q)) < c) continue;
    have_factor_above_c = true;
    std::vector<PowerWitness> tws;
    bool all = true;
    for (const auto& cls : report.classes) {
      if (cls.kind != RootKind::UnitNotRootOfUnity) continue;
      auto w = certify_non_kth_power(cls, q, P, opt.witness_limit, opt.seed);
      if (w)
        tws.push_back(std::move(*w));
      else {
        all = false;
        unit_caveats.push_back("no q-th power witness for class " +
                               certify_detail::poly_label(cls.minimal_polynomial) + " at q = " +
                               std::to_string(q));
      }
    }
    if (all) {
      q_ok = q;
      ws = std::move(tws);
      break;
    }
  }

  if (report.r1 == 0) {
    cert.route = Route::NoUnity;
    if (q_ok) {
      cert.p0 = Int(static_cast<unsigned long>(q_ok));
      cert.witnesses = std::move(ws);
    } else if (!have_factor_above_c) {
      cert.caveats.push_back("no prime factor of k reaches the threshold c = " + c.get_str());
    } else {
      for (auto& s : unit_caveats) cert.caveats.push_back(s);
    }
    return cert;
  }

  cert.route = Route::Mixed;
  if (!q_ok) {
    if (!have_factor_above_c)
      cert.caveats.push_back("no prime factor of k reaches the threshold c = " + c.get_str());
    else
      for (auto& s : unit_caveats) cert.caveats.push_back(s);
    return cert;
  }
  cert.p0 = Int(static_cast<unsigned long>(q_ok));
  cert.witnesses = std::move(ws);
  auto mixed = f2_bound_and_A0p0(report, *cert.p0, constants.k0,
                                 constants.v_upper.value_or(Int(0)), true);
  cert.A0 = mixed.A0_at_p0;
  cert.f2_upper = mixed.f2_upper;
  for (const auto& cls : report.classes) {
    if (cls.kind != RootKind::RootOfUnity) continue;
    bool covered = false;
    for (auto& [q, e] : factorize(cls.order)) {
      if (valuation(k, q) >= static_cast<int>(mixed.A0_at_p0)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      cert.caveats.push_back("no prime of the order of class " +
                             certify_detail::poly_label(cls.minimal_polynomial) +
                             " divides k to exponent " + std::to_string(mixed.A0_at_p0));
  }
  return cert;
}

}  // namespace primediv

// Acceptance suite: every release criterion as one timed pass/fail line.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "primediv/primediv.hpp"

using namespace primediv;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

IntPolynomial from_coeffs(std::vector<long> c) {
  std::vector<Int> v(c.begin(), c.end());
  return IntPolynomial(std::move(v));
}

// --- criterion 1: totient identity over the full grid ----------------------

void criterion_totient_identity() {
  std::vector<uint64_t> phi(10001);
  for (uint64_t n = 2; n <= 10000; ++n) phi[n] = euler_phi(n);
  for (uint64_t k = 1; k <= 100; ++k) {
    auto parts = factorize(k);
    for (uint64_t n = 2; n <= 10000; ++n) {
      uint64_t h = 1;
      for (auto& [p, e] : parts) {
        if (n % p == 0)
          for (int i = 0; i < e; ++i) h *= p;
      }
      if (euler_phi(h * n) != h * phi[n])
        throw Failure("identity fails at n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
  }
}

// --- criterion 2: the single torsion root pipeline --------------------------

void criterion_linear_torsion_pipeline() {
  IntPolynomial P = from_coeffs({1, 1});
  auto certs = suggest_k(P, {1, 10000, kDefaultSeed});
  require(!certs.empty() && certs[0].k == 2, "expected the certificate k = 2");
  require(certs[0].A0 == 1, "expected exponent bound 1");
  require(certs[0].caveats.empty(), "certificate must be clean");

  DensityReport rep = scan(P, 2, 100000);
  require(rep.density_D >= 0.48 && rep.density_D <= 0.52,
          "density of D out of [0.48, 0.52]: " + std::to_string(rep.density_D));

  for (uint64_t p : sieve_primes(100000)) {
    auto [hp, hpk] = prime_divisor_pair(P, 2, p);
    bool in_D = hp && !hpk;
    if (in_D != (p % 4 == 3))
      throw Failure("membership of p=" + std::to_string(p) + " does not match p = 3 (mod 4)");
  }

  DensityReport odd = scan(P, 3, 100000);
  require(odd.D_count == 0, "difference set must be empty at k = 3");
}

// --- criterion 3: exact torsion densities vs the sieve ----------------------

void criterion_cyclotomic_oracle() {
  auto exact3 = exact_cyclotomic_density({3}, 3);
  require(exact3.dens_P == Rat(1, 2) && exact3.dens_Pk == Rat(1, 6) && exact3.dens_D == Rat(1, 3),
          "exact densities for order 3, k = 3 are wrong");
  IntPolynomial P3 = from_coeffs({1, 1, 1});
  DensityReport rep3 = scan(P3, 3, 100000);
  require(std::abs(rep3.density_P - 0.5) <= 0.02, "order-3 base density off");
  require(std::abs(rep3.density_Pk - exact3.dens_Pk.get_d()) <= 0.02, "order-3 composed density off");
  require(std::abs(rep3.density_D - exact3.dens_D.get_d()) <= 0.02, "order-3 difference density off");

  IntPolynomial P12 = from_coeffs({1, 0, -1, 0, 1});
  auto certs = suggest_k(P12, {3, 10000, kDefaultSeed});
  const KCertificate* mixed_primes = nullptr;
  for (const auto& c : certs)
    if (c.k == 7776) mixed_primes = &c;
  require(mixed_primes != nullptr, "expected the certificate k = lcm(2^5, 3^5) = 7776");
  require(mixed_primes->A0 == 5, "expected exponent bound 5");

  auto exact12 = exact_cyclotomic_density({12}, 7776);
  DensityReport rep12 = scan(P12, 7776, 100000);
  require(std::abs(rep12.density_P - exact12.dens_P.get_d()) <= 0.02, "order-12 base density off");
  require(std::abs(rep12.density_Pk - exact12.dens_Pk.get_d()) <= 0.02,
          "order-12 composed density off");
  require(rep12.f_hat < 0.95, "f_hat must drop below 1 - 0.05");
}

// --- criterion 4: unit-only quadratic --------------------------------------

void criterion_unit_quadratic() {
  IntPolynomial P = from_coeffs({1, -3, 1});
  auto rep = classify_roots(P);
  auto cons = compute_constants(P, rep);
  require(cons.k0 == 6, "k0 must be 6");
  require(cons.c && *cons.c == 6, "c must be 6");

  auto w = certify_non_kth_power(rep.classes[0], 7, P, 100);
  require(w.has_value() && w->witness_prime == 29, "expected the witness prime 29 for k = 7");
  require(w->image_coeffs.size() == 1 && w->image_coeffs[0] == 7, "expected root image 7");
  require(powmod(7, 4, 29) == 23 && 23 != 1, "7^4 must be 23 (mod 29)");

  DensityReport dr = scan(P, 7, 100000);
  require(dr.D_count > 0, "difference set must be nonempty");
  require(dr.f_hat <= 0.95, "f_hat must be at most 1 - 1/20");
}

// --- criterion 5: mixed pipeline --------------------------------------------

void criterion_mixed_pipeline() {
  IntPolynomial P = from_coeffs({-2, -1, 1});
  auto certs = suggest_k(P, {1, 10000, kDefaultSeed});
  require(!certs.empty() && certs[0].k == 4, "expected the certificate k = 4");
  require(certs[0].p0 && *certs[0].p0 == 2, "expected p0 = 2");
  require(certs[0].A0 == 2, "expected exponent bound 2 at p0 = 2");
  require(certs[0].caveats.empty(), "certificate must be clean");

  DensityReport rep = scan(P, 4, 100000);
  require(rep.density_D > 0.1, "difference density must exceed 0.1");

  auto pred = predict_failures(P);
  for (uint64_t k : {3ULL, 5ULL, 7ULL}) {
    require(predicted_to_fail(pred, Int(static_cast<unsigned long>(k))),
            "odd k must be predicted to fail");
    DensityReport odd = scan(P, k, 10000);
    require(odd.D_count == 0, "difference set must be exactly empty at odd k");
  }
}

// --- criterion 6: anti-certification guard ----------------------------------

void criterion_anti_certification() {
  IntPolynomial P = from_coeffs({-4, 1});
  auto rep = classify_roots(P);
  require(!certify_non_kth_power(rep.classes[0], 2, P, 10000).has_value(),
          "a global square must not get a witness");
  auto cert = assess_k(P, 2, {1, 10000, kDefaultSeed});
  require(!cert.caveats.empty(), "k = 2 must carry a caveat for T - 4");
  DensityReport dr = scan(P, 2, 10000);
  require(dr.D_count == 0, "difference set must be empty for T - 4 at k = 2");

  // No caveat-free certificate across the corpus may scan to an empty D.
  std::vector<IntPolynomial> corpus = {
      from_coeffs({1, 1}),          from_coeffs({-2, 1}),        from_coeffs({-2, -1, 1}),
      from_coeffs({1, -3, 1}),      from_coeffs({1, 1, 1}),      from_coeffs({1, 0, -1, 0, 1}),
      from_coeffs({-4, 1}),         from_coeffs({1, 2, 2, 1}),   from_coeffs({-2, 0, 1}),
      from_coeffs({-2, -1, -1, 1})};
  for (const auto& Q : corpus) {
    for (const auto& c : suggest_k(Q, {2, 100000, kDefaultSeed})) {
      if (!c.caveats.empty()) continue;
      require(fits_u64(c.k), "certified k unexpectedly huge");
      DensityReport r = scan(Q, to_u64(c.k), 100000);
      if (r.D_count == 0)
        throw Failure("caveat-free certificate k=" + c.k.get_str() + " for " + to_string(Q) +
                      " scanned to an empty difference set");
    }
  }
}

// --- criterion 7: kernel oracles ---------------------------------------------

void criterion_kernel_oracles() {
  std::mt19937_64 rng(20240601);
  auto primes = sieve_primes(499);

  // Root counting against brute force.
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> c(1 + rng() % 7);
    for (auto& v : c) v = static_cast<long>(rng() % 201) - 100;
    IntPolynomial poly(std::move(c));
    if (poly.is_zero()) continue;
    for (uint64_t p : primes) {
      ModPoly f = fp::reduce_mod_p(poly, p);
      if (f.is_zero()) continue;
      uint64_t brute = 0;
      for (uint64_t x = 0; x < p; ++x)
        if (fp::eval(f, x) == 0) ++brute;
      if (fp::count_roots(f) != brute)
        throw Failure("root count mismatch mod " + std::to_string(p));
    }
  }

  // Rational factorization round trips.
  int done = 0;
  while (done < 100) {
    IntPolynomial prod{1};
    int parts = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts; ++i) {
      std::vector<Int> c(2 + rng() % 4);
      for (auto& v : c) v = static_cast<long>(rng() % 13) - 6;
      c.back() = 1;
      prod = prod * IntPolynomial(std::move(c));
    }
    if (prod.degree() < 1) continue;
    if (rational_gcd(prod, prod.derivative()).degree() != 0) continue;
    IntPolynomial check{1};
    for (const auto& g : factor_over_q(prod).factors) check = check * g;
    if (check != prod) throw Failure("rational factorization does not multiply back");
    ++done;
  }

  // Modular factorization round trips with certified-irreducible parts.
  std::vector<uint64_t> pool = {2, 3, 5, 7, 13, 31, 101, 257};
  for (int trial = 0; trial < 200; ++trial) {
    uint64_t p = pool[rng() % pool.size()];
    std::vector<uint64_t> c(2 + rng() % 8);
    for (auto& v : c) v = rng() % p;
    while (c.back() == 0) c.back() = rng() % p;
    ModPoly f{p, c};
    auto fac = fp::factor(f);
    ModPoly back = fp::constant(p, f.leading());
    for (auto& [g, m] : fac) {
      if (!fp::is_irreducible(g)) throw Failure("non-irreducible factor mod p");
      for (int i = 0; i < m; ++i) back = fp::mul(back, g);
    }
    if (!(back == f)) throw Failure("modular factorization does not multiply back");
  }
}

// --- criterion 8: exact group computation bounds the density loss -----------

void criterion_group_oracle() {
  IntPolynomial P = from_coeffs({-2, -1, 1});
  auto rep = classify_roots(P);
  auto bound = f2_bound_and_A0p0(rep, 2, compute_k0(P), v_upper_bound(rep), true);
  require(bound.f2_upper == Rat(1, 2), "bound at p0 = 2 must be 1/2");

  // Automorphisms of Q(i, sqrt2): i -> (-1)^a i, sqrt2 -> (-1)^b sqrt2.
  // One counts exactly those fixing a square root of 2.
  int numer = 0, order = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      ++order;
      if (b == 0) ++numer;
    }
  require(order == 4, "the group has order 4");
  Rat exact(numer, order);
  exact.canonicalize();
  require(exact == Rat(1, 2), "exact loss fraction must be 1/2");
  require(exact <= bound.f2_upper, "exact value must not exceed the certified bound");
}

// --- criterion 9: scan throughput and partition independence ----------------

void criterion_scan_performance() {
  IntPolynomial P = from_coeffs({1, 0, -1, 0, 1});

  DensityReport a = scan(P, 8, 1000000, {1, 4096});
  DensityReport b = scan(P, 8, 1000000, {0, 1 << 16});
  require(a.pd_P == b.pd_P && a.pd_Pk == b.pd_Pk && a.D_count == b.D_count &&
              a.largest_D_prime == b.largest_D_prime,
          "reports depend on the block partition");

  auto start = std::chrono::steady_clock::now();
  DensityReport rep = scan(P, 8, 10000000, {0, 1 << 16});
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(rep.primes_tested == 664579, "unexpected prime count below 10^7");
  require(rep.D_count > 0, "difference set must be nonempty");
  require(secs < 60.0, "scan took " + std::to_string(secs) + " s, budget is 60 s");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<void()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "totient identity over 2 <= n <= 10^4, 1 <= k <= 100", criterion_totient_identity},
      {2, "linear torsion pipeline (k = 2 certificate, split densities)",
       criterion_linear_torsion_pipeline},
      {3, "exact torsion densities match the sieve", criterion_cyclotomic_oracle},
      {4, "unit quadratic route (c = 6, witness 29, k = 7 scan)", criterion_unit_quadratic},
      {5, "mixed pipeline (k = 4 certificate, odd-k failures)", criterion_mixed_pipeline},
      {6, "anti-certification guard (T - 4 and the corpus)", criterion_anti_certification},
      {7, "kernel oracles (roots, rational and modular factorization)", criterion_kernel_oracles},
      {8, "exact automorphism count bounds the density loss", criterion_group_oracle},
      {9, "scan throughput and partition independence", criterion_scan_performance},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS", detail;
    try {
      crit.run();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << verdict << "  criterion " << crit.id << ": " << crit.label << "  (" << std::fixed
         << std::setprecision(2) << secs << " s)";
    if (!detail.empty()) line << "  -- " << detail;
    std::cout << line.str() << std::endl;
  }
  return failures;
}

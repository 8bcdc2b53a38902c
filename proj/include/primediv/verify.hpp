#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <thread>
#include <utility>
#include <vector>

#include "primediv/classify.hpp"
#include "primediv/errors.hpp"
#include "primediv/factor_q.hpp"
#include "primediv/int_polynomial.hpp"

namespace primediv {

/// All primes <= N, ascending, by a segmented sieve (memory O(sqrt N + segment)).
inline std::vector<uint64_t> sieve_primes(uint64_t N) {
  if (N < 2) throw Error(Errc::InvalidArgument, "sieve bound must be at least 2");
  uint64_t root = 1;
  while ((root + 1) * (root + 1) <= N) ++root;
  std::vector<uint8_t> base_comp(root + 1, 0);
  std::vector<uint64_t> base;
  for (uint64_t i = 2; i <= root; ++i) {
    if (!base_comp[i]) {
      base.push_back(i);
      for (uint64_t j = i * i; j <= root; j += i) base_comp[j] = 1;
    }
  }
  std::vector<uint64_t> primes;
  primes.reserve(N > 100 ? static_cast<std::size_t>(1.2 * N / std::max<double>(1.0, std::log(static_cast<double>(N)))) : 32);
  const uint64_t seg_size = 1 << 20;
  std::vector<uint8_t> seg;
  for (uint64_t lo = 2; lo <= N; lo += seg_size) {
    uint64_t hi = std::min(N + 1, lo + seg_size);
    seg.assign(hi - lo, 0);
    for (uint64_t p : base) {
      if (p * p >= hi) break;
      uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (uint64_t j = start; j < hi; j += p) seg[j - lo] = 1;
    }
    for (uint64_t i = lo; i < hi; ++i) {
      if (!seg[i - lo]) primes.push_back(i);
    }
  }
  return primes;
}

// ---------------------------------------------------------------------------
// Per-prime divisor predicates
// ---------------------------------------------------------------------------

namespace scan_detail {

// Dense coefficient vectors over F_p for p < 2^31; schoolbook products
// accumulate in 128 bits with one reduction per cell.

inline int vdeg(const std::vector<uint64_t>& a) { return static_cast<int>(a.size()) - 1; }

inline void vnormalize(std::vector<uint64_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<uint64_t> vmul(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                                  uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    unsigned __int128 acc = 0;
    std::size_t lo = i >= b.size() ? i - b.size() + 1 : 0;
    std::size_t hi = std::min(i, a.size() - 1);
    for (std::size_t j = lo; j <= hi; ++j)
      acc += static_cast<unsigned __int128>(a[j]) * b[i - j];
    r[i] = static_cast<uint64_t>(acc % p);
  }
  vnormalize(r);
  return r;
}

// Remainder of a by monic-normalized f (leading coefficient inverted once).
inline void vrem(std::vector<uint64_t>& a, const std::vector<uint64_t>& f, uint64_t lead_inv,
                 uint64_t p) {
  vnormalize(a);
  while (a.size() >= f.size()) {
    uint64_t c = mulmod(a.back(), lead_inv, p);
    std::size_t off = a.size() - f.size();
    if (c != 0) {
      for (std::size_t j = 0; j + 1 < f.size(); ++j)
        a[off + j] = submod(a[off + j], mulmod(c, f[j], p), p);
    }
    a.pop_back();
    vnormalize(a);
  }
}

// T^e mod f for a monic f of degree >= 1.
inline std::vector<uint64_t> vpow_T(uint64_t e, const std::vector<uint64_t>& f, uint64_t p) {
  uint64_t lead_inv = inverse_mod(f.back(), p);
  std::vector<uint64_t> result{1 % p};
  std::vector<uint64_t> base{0, 1 % p};
  vrem(base, f, lead_inv, p);
  vnormalize(result);
  while (e) {
    if (e & 1) {
      result = vmul(result, base, p);
      vrem(result, f, lead_inv, p);
    }
    e >>= 1;
    if (e) {
      base = vmul(base, base, p);
      vrem(base, f, lead_inv, p);
    }
  }
  return result;
}

// Degree of gcd(a, b) over F_p.
inline int vgcd_degree(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
  vnormalize(a);
  vnormalize(b);
  while (!b.empty()) {
    uint64_t lead_inv = inverse_mod(b.back(), p);
    vrem(a, b, lead_inv, p);
    std::swap(a, b);
  }
  return vdeg(a);
}

/// Scan kernel for one polynomial and exponent; reduces coefficients through
/// an int64 fast path when they fit.
struct Kernel {
  std::vector<Int> big;
  std::vector<int64_t> small;
  bool use_small = false;
  uint64_t k = 1;
  int deg = 0;
  bool direct = false;  // work modulo the composed polynomial itself

  Kernel(const IntPolynomial& P, uint64_t k_in) : k(k_in), deg(P.degree()) {
    big = P.coeffs();
    use_small = true;
    for (const auto& c : big) {
      if (mpz_sizeinbase(c.get_mpz_t(), 2) > 62) {
        use_small = false;
        break;
      }
    }
    if (use_small) {
      small.reserve(big.size());
      for (const auto& c : big) small.push_back(static_cast<int64_t>(mpz_get_si(c.get_mpz_t())));
    }
    direct = k * static_cast<uint64_t>(deg) <= 256;
  }

  std::vector<uint64_t> reduce(uint64_t p) const {
    std::vector<uint64_t> f(big.size());
    if (use_small) {
      auto ip = static_cast<int64_t>(p);
      for (std::size_t i = 0; i < small.size(); ++i) {
        int64_t v = small[i] % ip;
        if (v < 0) v += ip;
        f[i] = static_cast<uint64_t>(v);
      }
    } else {
      for (std::size_t i = 0; i < big.size(); ++i)
        f[i] = mpz_fdiv_ui(big[i].get_mpz_t(), p);
    }
    return f;  // monic input: leading stays 1, no normalization needed
  }

  // (p divides P, p divides P(T^k)); checks the per-prime subset law.
  std::pair<bool, bool> divisor_pair(uint64_t p) const {
    if (p == 2) {
      // Over F_2 the k-th power map is the identity, so both predicates agree.
      uint64_t c0 = use_small ? ((small[0] % 2 + 2) % 2) : mpz_fdiv_ui(big[0].get_mpz_t(), 2);
      uint64_t c1 = 0;
      for (std::size_t i = 0; i < big.size(); ++i)
        c1 ^= use_small ? static_cast<uint64_t>((small[i] % 2 + 2) % 2)
                        : mpz_fdiv_ui(big[i].get_mpz_t(), 2);
      bool hr = (c0 == 0) || (c1 % 2 == 0);
      return {hr, hr};
    }
    std::vector<uint64_t> F = reduce(p);

    // Roots of P itself: deg gcd(T^p - T, F).
    std::vector<uint64_t> tp = vpow_T(p, F, p);
    {
      // tp - T
      if (tp.size() < 2) tp.resize(2, 0);
      tp[1] = submod(tp[1], 1, p);
      vnormalize(tp);
    }
    bool has_p = vgcd_degree(tp, F, p) >= 1;

    bool has_pk;
    if (k == 1) {
      has_pk = has_p;
    } else if (direct) {
      // T^p mod F(T^k) via the subring F_p[T^k]: with p = q*k + s,
      // T^p = T^s * G(T^k) where G = U^q mod F(U), already fully reduced.
      uint64_t q = p / k, s = p % k;
      std::vector<uint64_t> G = vpow_T(q, F, p);
      std::size_t kd = static_cast<std::size_t>(k) * static_cast<std::size_t>(deg);
      std::vector<uint64_t> X(kd, 0);
      for (std::size_t i = 0; i < G.size(); ++i) X[i * k + s] = G[i];
      if (X.size() < 2) X.resize(2, 0);
      X[1] = submod(X[1], 1, p);
      vnormalize(X);
      std::vector<uint64_t> fbig(kd + 1, 0);
      for (std::size_t i = 0; i < F.size(); ++i) fbig[i * k] = F[i];
      has_pk = vgcd_degree(std::move(X), std::move(fbig), p) >= 1;
    } else {
      // x^k ranges over {0} and the subgroup of (p-1)/gcd(k, p-1)-th roots of
      // unity, so P(T^k) has a root iff P has a root in that set.
      if (F[0] == 0) {
        has_pk = true;
      } else {
        uint64_t g = std::gcd(k, p - 1);
        uint64_t e = (p - 1) / g;
        std::vector<uint64_t> W = vpow_T(e, F, p);
        if (W.empty()) W.push_back(0);
        W[0] = submod(W[0], 1, p);
        vnormalize(W);
        has_pk = vgcd_degree(std::move(W), F, p) >= 1;
      }
    }
    if (has_pk && !has_p)
      throw Error(Errc::Internal, "subset law violated at p = " + std::to_string(p));
    return {has_p, has_pk};
  }
};

}  // namespace scan_detail

/// (p divides P, p divides P(T^k)) for a single prime.
inline std::pair<bool, bool> prime_divisor_pair(const IntPolynomial& P, uint64_t k, uint64_t p) {
  return scan_detail::Kernel(P, k).divisor_pair(p);
}

// ---------------------------------------------------------------------------
// Density scan
// ---------------------------------------------------------------------------

/// Aggregates of a sieve run: how many primes divide P, how many divide
/// P(T^k), and the size of the difference set D.
struct DensityReport {
  uint64_t N = 0;
  uint64_t primes_tested = 0;
  uint64_t skipped = 0;  // reserved; no prime degenerates for monic input
  uint64_t pd_P = 0;
  uint64_t pd_Pk = 0;
  uint64_t D_count = 0;
  uint64_t largest_D_prime = 0;
  double density_P = 0.0;
  double density_Pk = 0.0;
  double density_D = 0.0;
  double f_hat = 0.0;  // pd_Pk / pd_P
};

struct ScanOptions {
  unsigned threads = 0;       // 0 = hardware concurrency
  uint64_t block_size = 1 << 16;
};

/// Tests every prime p <= N for divisor-ship of P and of P(T^k) and
/// aggregates the counts. Work is split over contiguous prime blocks; the
/// merge is commutative, so the report is independent of the partition.
inline DensityReport scan(const IntPolynomial& P, uint64_t k, uint64_t N, ScanOptions opt = {}) {
  check_preconditions(P);
  if (k == 0) throw Error(Errc::InvalidArgument, "k must be positive");
  if (N >= (1ULL << 31)) throw Error(Errc::LimitExceeded, "sieve bound above 2^31");
  std::vector<uint64_t> primes = sieve_primes(N);
  scan_detail::Kernel kernel(P, k);

  struct Partial {
    uint64_t pd_P = 0, pd_Pk = 0, D = 0, largest_D = 0;
  };

  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  uint64_t block = std::max<uint64_t>(1, opt.block_size);
  uint64_t nblocks = (primes.size() + block - 1) / block;
  threads = static_cast<unsigned>(std::min<uint64_t>(threads, nblocks));

  std::vector<Partial> partials(nblocks);
  std::atomic<uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&]() {
    try {
      while (true) {
        uint64_t b = next.fetch_add(1);
        if (b >= nblocks || failed.load()) break;
        Partial part;
        std::size_t lo = static_cast<std::size_t>(b * block);
        std::size_t hi = std::min(primes.size(), static_cast<std::size_t>((b + 1) * block));
        for (std::size_t i = lo; i < hi; ++i) {
          auto [hp, hpk] = kernel.divisor_pair(primes[i]);
          if (hp) ++part.pd_P;
          if (hpk) ++part.pd_Pk;
          if (hp && !hpk) {
            ++part.D;
            part.largest_D = std::max(part.largest_D, primes[i]);
          }
        }
        partials[b] = part;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      failed.store(true);
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  DensityReport rep;
  rep.N = N;
  rep.primes_tested = primes.size();
  for (const auto& part : partials) {
    rep.pd_P += part.pd_P;
    rep.pd_Pk += part.pd_Pk;
    rep.D_count += part.D;
    rep.largest_D_prime = std::max(rep.largest_D_prime, part.largest_D);
  }
  if (rep.primes_tested) {
    rep.density_P = static_cast<double>(rep.pd_P) / static_cast<double>(rep.primes_tested);
    rep.density_Pk = static_cast<double>(rep.pd_Pk) / static_cast<double>(rep.primes_tested);
    rep.density_D = static_cast<double>(rep.D_count) / static_cast<double>(rep.primes_tested);
  }
  rep.f_hat = rep.pd_P ? static_cast<double>(rep.pd_Pk) / static_cast<double>(rep.pd_P) : 0.0;
  return rep;
}

// ---------------------------------------------------------------------------
// Exact densities in the all-torsion case
// ---------------------------------------------------------------------------

struct CyclotomicDensities {
  Rat dens_P;
  Rat dens_Pk;
  Rat dens_D;
};

/// Exact natural densities when every root class is torsion of some order n:
/// up to finitely many primes, p divides the order-n factor iff p = 1 (mod n),
/// and p divides its k-composition iff p = 1 (mod d) for some d with
/// d / gcd(d, k) = n. Inclusion-exclusion runs over residues mod the lcm.
inline CyclotomicDensities exact_cyclotomic_density(const std::vector<uint64_t>& orders,
                                                    uint64_t k) {
  if (orders.empty()) throw Error(Errc::InvalidArgument, "no orders given");
  if (k == 0) throw Error(Errc::InvalidArgument, "k must be positive");
  std::vector<uint64_t> divisors_k;
  for (uint64_t g = 1; g <= k; ++g)
    if (k % g == 0) divisors_k.push_back(g);

  std::vector<uint64_t> mods_p, mods_pk;
  uint64_t M = 1;
  auto push_mod = [&](uint64_t m, std::vector<uint64_t>& into) {
    into.push_back(m);
    M = std::lcm(M, m);
    if (M > 100'000'000) throw Error(Errc::LimitExceeded, "congruence modulus too large");
  };
  for (uint64_t n : orders) {
    if (n == 0) throw Error(Errc::InvalidArgument, "order must be positive");
    push_mod(n, mods_p);
    for (uint64_t g : divisors_k) {
      uint64_t d = n * g;
      if (std::gcd(d, k) == g) push_mod(d, mods_pk);
    }
  }

  uint64_t phi = 0, cP = 0, cPk = 0;
  for (uint64_t a = 1; a <= M; ++a) {
    if (std::gcd(a, M) != 1) continue;
    ++phi;
    bool inP = false, inPk = false;
    for (uint64_t m : mods_p)
      if (a % m == 1) {
        inP = true;
        break;
      }
    for (uint64_t m : mods_pk)
      if (a % m == 1) {
        inPk = true;
        break;
      }
    if (inP) ++cP;
    if (inPk) ++cPk;
  }
  CyclotomicDensities out;
  out.dens_P = Rat(static_cast<unsigned long>(cP), static_cast<unsigned long>(phi));
  out.dens_Pk = Rat(static_cast<unsigned long>(cPk), static_cast<unsigned long>(phi));
  out.dens_P.canonicalize();
  out.dens_Pk.canonicalize();
  out.dens_D = out.dens_P - out.dens_Pk;
  out.dens_D.canonicalize();
  return out;
}

/// Same oracle keyed off a classification; every class must be torsion.
inline CyclotomicDensities exact_cyclotomic_density(const ClassificationReport& report,
                                                    uint64_t k) {
  std::vector<uint64_t> orders;
  for (const auto& cls : report.classes) {
    if (cls.kind != RootKind::RootOfUnity)
      throw Error(Errc::NotCyclotomicCase, "a root class is not a root of unity");
    orders.push_back(cls.order);
  }
  return exact_cyclotomic_density(orders, k);
}

}  // namespace primediv

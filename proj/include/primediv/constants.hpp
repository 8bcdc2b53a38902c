#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "primediv/classify.hpp"
#include "primediv/errors.hpp"
#include "primediv/int_polynomial.hpp"

namespace primediv {

/// Segment of the lower Newton hull of a polynomial at p. Roots on the
/// segment have p-adic valuation slope_num/slope_den; length counts them.
struct NewtonPolygonSegment {
  Int prime;
  uint64_t slope_num = 0;  // h
  uint64_t slope_den = 1;  // e, gcd(h, e) = 1
  uint64_t length = 0;
};

/// The certified numeric data driving every candidate-exponent route.
/// Quantities that would need Galois or unit-group data are replaced by the
/// rigorous computable bounds listed in `notes`.
struct ConstantsReport {
  Int k0;                              // primes >= k0 are unramified in the splitting field
  std::optional<uint64_t> p_min;       // least prime dividing a torsion order (iff r1 > 0)
  std::optional<uint64_t> A0;          // exponent bound for the torsion route (iff r1 > 0)
  Rat d1_lower_bound;                  // 1 / min factor degree
  Int L1_degree_upper_bound;           // product of factorials of factor degrees
  std::optional<Int> v_upper;          // valuation bound for non-unit classes (iff r3 > 0)
  std::optional<Int> c;                // candidate-prime threshold (iff r2 + r3 > 0)
  std::vector<std::string> notes;
};

/// Primes at least this bound cannot divide disc(P), hence cannot ramify in
/// the splitting field of P.
inline Int compute_k0(const IntPolynomial& P) {
  Int disc = abs(discriminant(P));
  if (disc == 0) throw Error(Errc::NotSeparable, "discriminant vanishes");
  Int k0 = 2;
  if (disc > 1) {
    Int l = largest_prime_factor(disc) + 1;
    if (l > k0) k0 = l;
  }
  return k0;
}

inline Int l1_degree_upper_bound(const ClassificationReport& report) {
  Int d = 1;
  for (const auto& cls : report.classes) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), cls.count);
    d *= f;
  }
  return d;
}

/// Smallest A >= 1 with p_min^A > r1 * min_factor_degree, decided in exact
/// integer arithmetic so boundary cases land on the strict side.
inline uint64_t compute_A0(const ClassificationReport& report) {
  if (report.r1 == 0) throw Error(Errc::NoRootsOfUnity, "no torsion roots");
  Int bound = Int(report.r1) * static_cast<unsigned long>(report.min_factor_degree);
  Int pw = static_cast<unsigned long>(*report.p_min);
  uint64_t A = 1;
  while (pw <= bound) {
    pw *= static_cast<unsigned long>(*report.p_min);
    ++A;
  }
  return A;
}

/// Lower Newton hull of m at p. Requires m monic with p | m(0), so at least
/// one segment has positive slope (a root of positive p-adic valuation).
inline std::vector<NewtonPolygonSegment> newton_polygon(const IntPolynomial& m, const Int& p) {
  if (!m.is_monic() || m.degree() < 1)
    throw Error(Errc::InvalidArgument, "newton_polygon needs a monic polynomial");
  if (m.constant_term() == 0)
    throw Error(Errc::InvalidArgument, "newton_polygon needs a nonzero constant term");
  if (!mpz_divisible_p(m.constant_term().get_mpz_t(), p.get_mpz_t()))
    throw Error(Errc::BadPrime, "prime does not divide the constant term");

  struct Pt {
    int64_t x;
    int64_t y;
  };
  std::vector<Pt> pts;
  for (int i = 0; i <= m.degree(); ++i) {
    const Int& a = m.coeff(static_cast<std::size_t>(i));
    if (a == 0) continue;
    pts.push_back({i, valuation(a, p)});
  }
  std::vector<Pt> hull;
  for (const Pt& q : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      // Drop b when it lies on or above the chord from a to q.
      if ((static_cast<__int128>(b.y - a.y)) * (q.x - a.x) >=
          (static_cast<__int128>(q.y - a.y)) * (b.x - a.x)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(q);
  }
  std::vector<NewtonPolygonSegment> segs;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    auto dx = static_cast<uint64_t>(hull[i].x - hull[i - 1].x);
    auto dy = static_cast<uint64_t>(hull[i - 1].y - hull[i].y);
    uint64_t g = dy == 0 ? dx : std::gcd(dy, dx);
    segs.push_back({p, dy / g, dx / g, dx});
  }
  return segs;
}

/// A bound V such that every non-unit class has a prime ideal of the
/// splitting field on which its valuation lies in (0, V]. Any prime k > V
/// then avoids dividing that valuation. Uses the least positive Newton slope
/// at the smallest prime of the constant term, scaled by the worst-case
/// ramification (the splitting-field degree bound).
inline Int v_upper_bound(const ClassificationReport& report) {
  if (report.r3 == 0) throw Error(Errc::NoNonUnits, "no non-unit roots");
  Int dub = l1_degree_upper_bound(report);
  Int V = 0;
  for (const auto& cls : report.classes) {
    if (cls.kind != RootKind::NonUnit) continue;
    Int p = smallest_prime_factor(cls.minimal_polynomial.constant_term());
    auto segs = newton_polygon(cls.minimal_polynomial, p);
    bool have = false;
    uint64_t best_h = 0, best_e = 1;
    for (const auto& s : segs) {
      if (s.slope_num == 0) continue;
      if (!have || Int(s.slope_num) * best_e < Int(best_h) * s.slope_den) {
        best_h = s.slope_num;
        best_e = s.slope_den;
        have = true;
      }
    }
    if (!have) throw Error(Errc::Internal, "no positive slope for a non-unit class");
    Int cand;
    mpz_cdiv_q(cand.get_mpz_t(), Int(Int(best_h) * dub).get_mpz_t(), Int(best_e).get_mpz_t());
    if (cand > V) V = cand;
  }
  return V;
}

/// Threshold above which candidate primes satisfy every non-torsion-side
/// hypothesis that does not need a per-candidate witness.
inline Int compute_c(const ClassificationReport& report, const Int& k0, const Int& V) {
  if (report.r2 + report.r3 == 0)
    throw Error(Errc::OnlyRootsOfUnity, "every root is a root of unity");
  Int c;
  if (report.r2 > 0 && report.r3 > 0) {
    c = Int(report.r2) + report.r3 + 1;
    if (k0 > c) c = k0;
    if (V + 1 > c) c = V + 1;
  } else if (report.r2 == 0) {
    c = Int(report.r3) + 1;
    if (V + 1 > c) c = V + 1;
  } else {
    c = Int(report.r2) + 1;
    if (k0 > c) c = k0;
  }
  return c;
}

/// Fraction bound on the density lost to the non-torsion classes at a
/// certified prime p0, and the matching exponent bound for the torsion
/// classes. Exact rational arithmetic throughout.
struct MixedRouteBound {
  Rat f2_upper;
  uint64_t A0_at_p0 = 0;
};

inline MixedRouteBound f2_bound_and_A0p0(const ClassificationReport& report, const Int& p0,
                                         const Int& k0, const Int& V, bool certified) {
  if (report.r1 == 0) throw Error(Errc::NoRootsOfUnity, "no torsion roots");
  if (report.r2 + report.r3 == 0)
    throw Error(Errc::OnlyRootsOfUnity, "no non-torsion roots");
  Int c = compute_c(report, k0, V);
  if (p0 < c) throw Error(Errc::InvalidArgument, "p0 must be at least c");
  if (!is_probable_prime(p0)) throw Error(Errc::NotPrime, "p0 must be prime");
  if (!certified)
    throw Error(Errc::CertificateMissing, "irreducibility at p0 is not certified");

  Int dub = l1_degree_upper_bound(report);
  Int r23 = Int(report.r2) + report.r3;
  // f2_upper = 1 - (1 - r23/p0) / (dub * (p0 - 1))
  Rat f2 = 1 - Rat(p0 - r23) / Rat(p0 * dub * (p0 - 1));
  f2.canonicalize();

  // Smallest A with p_min^A * (p0 - r23) > r1 * mfd * p0 * dub * (p0 - 1).
  Int rhs = Int(report.r1) * static_cast<unsigned long>(report.min_factor_degree) * p0 * dub *
            (p0 - 1);
  Int lhs_unit = p0 - r23;
  Int pw = static_cast<unsigned long>(*report.p_min);
  uint64_t A = 1;
  while (pw * lhs_unit <= rhs) {
    pw *= static_cast<unsigned long>(*report.p_min);
    ++A;
  }
  return {f2, A};
}

/// One-stop constants assembly for a classified polynomial.
inline ConstantsReport compute_constants(const IntPolynomial& P,
                                         const ClassificationReport& report) {
  ConstantsReport out;
  out.k0 = compute_k0(P);
  out.d1_lower_bound = Rat(1, static_cast<unsigned long>(report.min_factor_degree));
  out.d1_lower_bound.canonicalize();
  out.L1_degree_upper_bound = l1_degree_upper_bound(report);
  out.notes.push_back("d1 lower bound = 1/(min factor degree); exact value would need the Galois group");
  if (report.r1 > 0) {
    out.p_min = report.p_min;
    out.A0 = compute_A0(report);
  }
  if (report.r3 > 0) {
    out.v_upper = v_upper_bound(report);
    out.notes.push_back(
        "valuation bound = Newton slope times the splitting-degree bound; conservative");
  }
  if (report.r2 > 0) {
    out.notes.push_back(
        "unit classes carry no global exponent datum; candidates are certified by residue witnesses");
  }
  if (report.r2 + report.r3 > 0)
    out.c = compute_c(report, out.k0, out.v_upper.value_or(Int(0)));
  return out;
}

}  // namespace primediv

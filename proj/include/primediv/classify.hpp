#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "primediv/factor_q.hpp"
#include "primediv/int_polynomial.hpp"

namespace primediv {

enum class RootKind { RootOfUnity, UnitNotRootOfUnity, NonUnit };

inline const char* root_kind_name(RootKind k) {
  switch (k) {
    case RootKind::RootOfUnity: return "root_of_unity";
    case RootKind::UnitNotRootOfUnity: return "unit_not_root_of_unity";
    case RootKind::NonUnit: return "non_unit";
  }
  return "unknown";
}

/// One irreducible factor of the input and the nature of its roots. Roots are
/// tracked per conjugacy class, never individually: everything used downstream
/// is constant on a class.
struct RootClass {
  IntPolynomial minimal_polynomial;
  RootKind kind = RootKind::NonUnit;
  uint64_t order = 0;   // exact torsion order, set iff kind == RootOfUnity
  unsigned count = 0;   // number of roots in the class = degree of the factor
};

/// Partition of the roots into torsion / unit / non-unit classes, with the
/// per-class orders, the union of their prime factors, and its least element.
struct ClassificationReport {
  std::vector<RootClass> classes;
  unsigned r1 = 0;  // roots of unity
  unsigned r2 = 0;  // units that are not roots of unity
  unsigned r3 = 0;  // non-units
  std::set<uint64_t> s_union;             // primes dividing some torsion order
  std::optional<uint64_t> p_min;          // least of s_union, iff r1 > 0
  unsigned min_factor_degree = 0;
};

/// If m is the n-th cyclotomic polynomial for some n, returns n. The minimal
/// polynomial over Q of a root of unity is cyclotomic, so exact comparison
/// against the candidates with matching totient is complete.
inline std::optional<uint64_t> match_cyclotomic(const IntPolynomial& m) {
  if (m.degree() < 1) return std::nullopt;
  for (uint64_t n : inverse_totient(static_cast<uint64_t>(m.degree()))) {
    if (m == cyclotomic_poly(n)) return n;
  }
  return std::nullopt;
}

/// Classifies the roots of P per irreducible factor. An algebraic integer is
/// a unit exactly when its monic minimal polynomial has constant term +-1,
/// and a unit is torsion exactly when that polynomial is cyclotomic.
inline ClassificationReport classify_roots(const IntPolynomial& P, uint64_t seed = kDefaultSeed) {
  check_preconditions(P);
  ClassificationReport report;
  report.min_factor_degree = static_cast<unsigned>(P.degree());
  for (auto& m : factor_over_q(P, seed).factors) {
    RootClass cls;
    cls.count = static_cast<unsigned>(m.degree());
    report.min_factor_degree = std::min(report.min_factor_degree, cls.count);
    if (abs(m.constant_term()) >= 2) {
      cls.kind = RootKind::NonUnit;
      report.r3 += cls.count;
    } else if (auto n = match_cyclotomic(m)) {
      cls.kind = RootKind::RootOfUnity;
      cls.order = *n;
      report.r1 += cls.count;
      for (auto& [q, e] : factorize(*n)) report.s_union.insert(q);
    } else {
      cls.kind = RootKind::UnitNotRootOfUnity;
      report.r2 += cls.count;
    }
    cls.minimal_polynomial = std::move(m);
    report.classes.push_back(std::move(cls));
  }
  if (!report.s_union.empty()) report.p_min = *report.s_union.begin();
  return report;
}

}  // namespace primediv

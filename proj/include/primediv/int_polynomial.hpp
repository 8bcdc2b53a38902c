#pragma once

#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "primediv/errors.hpp"
#include "primediv/integer.hpp"

namespace primediv {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree order. The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

  IntPolynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
  }

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(Int v) {
    IntPolynomial p;
    p.c_.push_back(std::move(v));
    p.normalize();
    return p;
  }
  static IntPolynomial variable() { return IntPolynomial{0, 1}; }

  // T^n with coefficient c.
  static IntPolynomial monomial(const Int& c, std::size_t n) {
    if (c == 0) return IntPolynomial();
    IntPolynomial p;
    p.c_.assign(n + 1, Int(0));
    p.c_[n] = c;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }

  const Int& coeff(std::size_t i) const {
    static const Int kZero = 0;
    return i < c_.size() ? c_[i] : kZero;
  }

  const Int& leading() const {
    if (c_.empty()) throw Error(Errc::InvalidArgument, "leading coefficient of zero polynomial");
    return c_.back();
  }

  const Int& constant_term() const { return coeff(0); }

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<Int> r = a.c_;
    for (auto& v : r) v = -v;
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(r));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const Int& s) {
    if (s == 0) return IntPolynomial();
    std::vector<Int> r = a.c_;
    for (auto& v : r) v *= s;
    return IntPolynomial(std::move(r));
  }

  // Exact division of every coefficient; s must divide each one.
  IntPolynomial divide_scalar_exact(const Int& s) const {
    std::vector<Int> r = c_;
    for (auto& v : r) {
      if (!mpz_divisible_p(v.get_mpz_t(), s.get_mpz_t()))
        throw Error(Errc::Internal, "inexact scalar division");
      v /= s;
    }
    return IntPolynomial(std::move(r));
  }

  Int evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  IntPolynomial derivative() const {
    if (c_.size() <= 1) return IntPolynomial();
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<unsigned long>(i));
    return IntPolynomial(std::move(r));
  }

  /// p(T^k). Degree scales by k; guarded so a huge k cannot exhaust memory.
  IntPolynomial compose_power(uint64_t k) const {
    if (k == 0) throw Error(Errc::InvalidArgument, "compose_power needs k >= 1");
    if (is_zero() || k == 1) return *this;
    uint64_t new_deg = k * static_cast<uint64_t>(degree());
    if (new_deg > 20'000'000) throw Error(Errc::LimitExceeded, "composed degree too large");
    std::vector<Int> r(new_deg + 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return IntPolynomial(std::move(r));
  }

  // gcd of coefficient absolute values (0 for the zero polynomial).
  Int content() const {
    Int g = 0;
    for (const auto& v : c_) g = gcd(g, v);
    return g;
  }

  IntPolynomial primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    if (leading() < 0) g = -g;
    return divide_scalar_exact(g);
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

/// Integer-polynomial numerator over a positive common denominator, kept
/// normalized so gcd(denominator, content) = 1. Intermediate form for monic
/// rescalings during gcd work over the rationals.
struct RationalPolynomial {
  IntPolynomial numerator;
  Int denominator = 1;

  void normalize() {
    if (denominator == 0) throw Error(Errc::InvalidArgument, "zero denominator");
    if (denominator < 0) {
      denominator = -denominator;
      numerator = -numerator;
    }
    Int g = gcd(numerator.content(), denominator);
    if (g > 1) {
      numerator = numerator.divide_scalar_exact(g);
      denominator /= g;
    }
  }

  static RationalPolynomial from_integer(IntPolynomial p) {
    return RationalPolynomial{std::move(p), 1};
  }

  // p / lc(p), as a normalized rational polynomial.
  static RationalPolynomial monic_scale(const IntPolynomial& p) {
    RationalPolynomial r{p, p.leading()};
    r.normalize();
    return r;
  }

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.numerator == b.numerator && a.denominator == b.denominator;
  }
};

// ---------------------------------------------------------------------------
// Division
// ---------------------------------------------------------------------------

/// Quotient and remainder of n by a monic divisor d; exact over the integers.
inline std::pair<IntPolynomial, IntPolynomial> divrem_monic(const IntPolynomial& n,
                                                            const IntPolynomial& d) {
  if (!d.is_monic()) throw Error(Errc::InvalidArgument, "divrem_monic needs a monic divisor");
  std::vector<Int> rem(n.coeffs());
  int dn = n.degree(), dd = d.degree();
  if (dn < dd) return {IntPolynomial(), n};
  std::vector<Int> quot(static_cast<std::size_t>(dn - dd) + 1, Int(0));
  for (int i = dn; i >= dd; --i) {
    Int c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= c * d.coeff(static_cast<std::size_t>(j));
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

/// If d (monic) divides n exactly, store the quotient and return true.
inline bool try_divide_exact(const IntPolynomial& n, const IntPolynomial& d, IntPolynomial* q) {
  auto [quot, rem] = divrem_monic(n, d);
  if (!rem.is_zero()) return false;
  if (q) *q = std::move(quot);
  return true;
}

/// Pseudo-remainder: lc(d)^(deg n - deg d + 1) * n mod d, computed without
/// fractions.
inline IntPolynomial pseudo_rem(const IntPolynomial& n, const IntPolynomial& d) {
  if (d.is_zero()) throw Error(Errc::InvalidArgument, "pseudo_rem by zero");
  int dd = d.degree();
  IntPolynomial r = n;
  const Int& lead = d.leading();
  int e = n.degree() - dd + 1;
  while (!r.is_zero() && r.degree() >= dd) {
    IntPolynomial shift = IntPolynomial::monomial(r.leading(), static_cast<std::size_t>(r.degree() - dd));
    r = r * lead - shift * d;
    --e;
  }
  while (e-- > 0) r = r * lead;
  return r;
}

// ---------------------------------------------------------------------------
// Resultant / discriminant / gcd over Q
// ---------------------------------------------------------------------------

/// Resultant by the fraction-free subresultant remainder sequence.
inline Int resultant(const IntPolynomial& pa, const IntPolynomial& pb) {
  if (pa.is_zero() || pb.is_zero()) return 0;
  IntPolynomial A = pa, B = pb;
  Int s = 1;
  if (A.degree() < B.degree()) {
    if ((A.degree() & 1) && (B.degree() & 1)) s = -1;
    std::swap(A, B);
  }
  if (B.degree() == 0) return s * pow_int(B.coeff(0), static_cast<unsigned long>(A.degree()));

  Int ca = A.content(), cb = B.content();
  A = A.divide_scalar_exact(ca);
  B = B.divide_scalar_exact(cb);
  Int t = pow_int(ca, static_cast<unsigned long>(B.degree())) *
          pow_int(cb, static_cast<unsigned long>(A.degree()));

  Int g = 1, h = 1;
  while (true) {
    int da = A.degree(), db = B.degree();
    int delta = da - db;
    if ((da & 1) && (db & 1)) s = -s;
    IntPolynomial R = pseudo_rem(A, B);
    A = std::move(B);
    if (R.is_zero()) return 0;  // positive-degree common factor
    Int divisor = g * pow_int(h, static_cast<unsigned long>(delta));
    B = R.divide_scalar_exact(divisor);
    g = A.leading();
    if (delta > 0) {
      Int num = pow_int(g, static_cast<unsigned long>(delta));
      if (delta > 1) {
        Int den = pow_int(h, static_cast<unsigned long>(delta - 1));
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
          throw Error(Errc::Internal, "subresultant h update not exact");
        num /= den;
      }
      h = num;
    }
    if (B.degree() == 0) {
      int da2 = A.degree();
      Int num = pow_int(B.coeff(0), static_cast<unsigned long>(da2));
      if (da2 > 1) {
        Int den = pow_int(h, static_cast<unsigned long>(da2 - 1));
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
          throw Error(Errc::Internal, "subresultant final step not exact");
        num /= den;
      }
      return s * t * num;
    }
  }
}

/// Discriminant of a monic polynomial of degree >= 1.
inline Int discriminant(const IntPolynomial& p) {
  if (!p.is_monic() || p.degree() < 1)
    throw Error(Errc::InvalidArgument, "discriminant needs a monic polynomial of degree >= 1");
  int d = p.degree();
  if (d == 1) return 1;
  Int r = resultant(p, p.derivative());
  return ((static_cast<long>(d) * (d - 1) / 2) % 2) ? -r : r;
}

/// Primitive integer generator (positive leading coefficient) of gcd(a, b)
/// over the rationals. Degree 0 results collapse to the constant 1.
inline IntPolynomial rational_gcd(const IntPolynomial& pa, const IntPolynomial& pb) {
  if (pa.is_zero() && pb.is_zero())
    throw Error(Errc::InvalidArgument, "gcd of two zero polynomials");
  if (pa.is_zero()) return pb.primitive_part();
  if (pb.is_zero()) return pa.primitive_part();
  IntPolynomial A = pa.primitive_part(), B = pb.primitive_part();
  if (A.degree() < B.degree()) std::swap(A, B);
  if (B.degree() == 0) return IntPolynomial{1};

  Int g = 1, h = 1;
  while (true) {
    int delta = A.degree() - B.degree();
    IntPolynomial R = pseudo_rem(A, B);
    if (R.is_zero()) return B.primitive_part();
    if (R.degree() == 0) return IntPolynomial{1};
    A = std::move(B);
    B = R.divide_scalar_exact(g * pow_int(h, static_cast<unsigned long>(delta)));
    g = A.leading();
    if (delta > 0) {
      Int num = pow_int(g, static_cast<unsigned long>(delta));
      if (delta > 1) num /= pow_int(h, static_cast<unsigned long>(delta - 1));
      h = num;
    }
  }
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

inline std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Int& c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace primediv

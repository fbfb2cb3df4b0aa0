#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "sigmaq/cyclotomic.hpp"

namespace sigmaq {

/// Square-free monomial in the formal radicals s_n = sqrt([n]_q),
/// 2 <= n <= k-1, as a sorted list of distinct indices. s_1 is identified
/// with 1 ([1]_q = 1) and never stored.
using RadKey = std::vector<int>;

/// Element of the formal-radical extension of Q(zeta_{4k}): a finite sum of
/// cyclotomic coefficients times square-free radical monomials, with the
/// single reduction s_n^2 = [n]_q applied eagerly. Formal equality implies
/// numerical equality under every branch assignment of the square roots.
class RadicalScalar {
 public:
  explicit RadicalScalar(const CycloField& f) : f_(&f) {}

  static RadicalScalar zero(const CycloField& f) { return RadicalScalar(f); }
  static RadicalScalar one(const CycloField& f);
  static RadicalScalar from_cyclotomic(const Cyclotomic& c);
  static RadicalScalar from_rational(const CycloField& f, const Rational& r);
  // s_n for 1 <= n <= k-1 (s_1 normalizes to 1).
  static RadicalScalar radical(const CycloField& f, int n);
  // sqrt([n]_q!) as the monomial s_1 s_2 ... s_n; with conjugate set, its
  // star, i.e. sqrt([n]_qbar!) in the branch pairing of star().
  static RadicalScalar sqrt_q_factorial(const CycloField& f, int n,
                                        bool conjugate = false);

  const CycloField& field() const { return *f_; }
  const std::map<RadKey, Cyclotomic>& terms() const { return t_; }

  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  // True when no radical symbol appears (possibly zero).
  bool is_cyclotomic() const;
  Cyclotomic cyclotomic_part() const;  // requires is_cyclotomic()
  bool is_monomial() const { return t_.size() == 1; }

  RadicalScalar operator-() const;
  RadicalScalar operator+(const RadicalScalar& o) const;
  RadicalScalar operator-(const RadicalScalar& o) const;
  RadicalScalar operator*(const RadicalScalar& o) const;
  RadicalScalar& operator+=(const RadicalScalar& o) { return *this = *this + o; }
  RadicalScalar& operator-=(const RadicalScalar& o) { return *this = *this - o; }
  RadicalScalar& operator*=(const RadicalScalar& o) { return *this = *this * o; }
  RadicalScalar scale(const Cyclotomic& c) const;

  bool operator==(const RadicalScalar& o) const;
  bool operator!=(const RadicalScalar& o) const { return !(*this == o); }

  // Inverse of a single-term element, via 1/s_n = s_n/[n]_q. Throws
  // std::domain_error on zero or a sum of several monomials.
  RadicalScalar invert_monomial() const;

  // Conjugation lifted to the formal ring: cyclotomic parts conjugate and
  // s_n -> zeta^{-2(n-1)} s_n, so that star(s_n)^2 = [n]_qbar. Involutive,
  // additive and multiplicative.
  RadicalScalar star() const;

  // Principal-branch float export: s_n evaluates to the square root of
  // [n]_q with argument in (-pi/2, pi/2].
  std::complex<double> to_complex() const;

  // Canonical text: terms "(<cyclotomic>)[*s<n>...]" joined by " + ".
  std::string str() const;

 private:
  const CycloField* f_;
  std::map<RadKey, Cyclotomic> t_;  // zero coefficients pruned

  void add_term(const RadKey& key, const Cyclotomic& c);
  void check_same_field(const RadicalScalar& o) const;
};

// Free-function spellings used throughout.
inline RadicalScalar rad_mul(const RadicalScalar& a, const RadicalScalar& b) {
  return a * b;
}
inline RadicalScalar rad_invert_monomial(const RadicalScalar& a) {
  return a.invert_monomial();
}
inline RadicalScalar star(const RadicalScalar& a) { return a.star(); }
inline std::complex<double> to_complex(const RadicalScalar& a) {
  return a.to_complex();
}

}  // namespace sigmaq

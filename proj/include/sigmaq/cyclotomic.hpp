#pragma once

#include <complex>
#include <string>
#include <vector>

#include "sigmaq/rational.hpp"

namespace sigmaq {

/// Shared, immutable data for the field Q(zeta) with zeta = exp(2*pi*i/(4k)).
///
/// Elements are reduced modulo the 4k-th cyclotomic polynomial, so the
/// coefficient vector in the power basis {zeta^0, ..., zeta^(deg-1)} is a
/// canonical form and equality is coefficient comparison. The deformation
/// parameter of order k and its fractional powers live here as
/// q = zeta^4, q^(1/2) = zeta^2, q^(1/4) = zeta.
class CycloField {
 public:
  // Cached per-order instance; thread-safe, lives for the process.
  static const CycloField& get(int k);

  int k() const { return k_; }
  int root_order() const { return 4 * k_; }  // zeta^(4k) = 1
  int degree() const { return degree_; }     // deg Phi_{4k}

  // x^e mod Phi_{4k} for e in [0, 2*degree-2]; used by multiplication.
  const std::vector<Rational>& power_row(int e) const { return power_rows_[e]; }
  // zeta^j in canonical form, j in [0, 4k).
  const std::vector<Rational>& zeta_row(int j) const { return zeta_rows_[j]; }
  const std::vector<Rational>& modulus() const { return phi_; }

  CycloField(const CycloField&) = delete;
  CycloField& operator=(const CycloField&) = delete;

 private:
  explicit CycloField(int k);

  int k_;
  int degree_;
  std::vector<Rational> phi_;  // monic, size degree_+1
  std::vector<std::vector<Rational>> power_rows_;
  std::vector<std::vector<Rational>> zeta_rows_;
};

/// Exact element of Q(zeta_{4k}) in canonical reduced form.
class Cyclotomic {
 public:
  explicit Cyclotomic(const CycloField& f)
      : f_(&f), c_(static_cast<size_t>(f.degree()), Rational(0)) {}

  static Cyclotomic zero(const CycloField& f) { return Cyclotomic(f); }
  static Cyclotomic one(const CycloField& f);
  static Cyclotomic from_rational(const CycloField& f, const Rational& r);
  static Cyclotomic zeta_pow(const CycloField& f, long j);

  const CycloField& field() const { return *f_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Coefficient of zeta^0; the whole value when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic operator*(const Rational& r) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inverse() const;
  // Complex conjugate (zeta -> zeta^{-1}).
  Cyclotomic conj() const;
  Cyclotomic pow(long e) const;

  // Float export only; equality decisions stay exact.
  std::complex<double> to_complex() const;

  // Canonical text: terms "<rational>" / "<rational>*z^<j>" joined by " + ",
  // ascending j, where z stands for the primitive 4k-th root of unity.
  std::string str() const;

 private:
  const CycloField* f_;
  std::vector<Rational> c_;

  void check_same_field(const Cyclotomic& o) const;
};

// Canonical generator access: zeta^j, j may be negative.
Cyclotomic zeta_power(int k, long j);
// q^j with q = zeta^4 = exp(2*pi*i/k).
Cyclotomic q_power(int k, long j);
// q^(j/2) = zeta^(2j); shows up in the mixed-sector exchange relations.
Cyclotomic q_half_power(int k, long j);

// [n]_q = 1 + q + ... + q^(n-1); conjugate flag replaces q by its conjugate.
Cyclotomic q_number(int k, long n, bool conjugate = false);
// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
Cyclotomic q_factorial(int k, long n, bool conjugate = false);

}  // namespace sigmaq

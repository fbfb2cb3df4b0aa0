#pragma once

#include <map>
#include <string>
#include <utility>

#include "sigmaq/matrix.hpp"
#include "sigmaq/report.hpp"

namespace sigmaq {

/// Crossing phase q^(alpha*m) picked up by the z-derivative when it acts
/// past m conjugated variables. The algebra fixes alpha = 1/2; the other
/// values exist as negative controls for the verification suite.
enum class CrossingPhase { zero, half, one };

/// Element of the generalized Grassmann algebra on z and zbar with
/// z^k = zbar^k = 0 and z*zbar = q^(1/2) zbar*z, stored as a coefficient
/// table over the normal-ordered basis zbar^m z^n (all zbar left of all z),
/// 0 <= m, n <= k-1. Zero coefficients are pruned.
class GrassmannElement {
 public:
  explicit GrassmannElement(const CycloField& f) : f_(&f) {}

  static GrassmannElement zero(const CycloField& f) {
    return GrassmannElement(f);
  }
  static GrassmannElement one(const CycloField& f);
  static GrassmannElement z(const CycloField& f);
  static GrassmannElement zbar(const CycloField& f);
  static GrassmannElement monomial(const CycloField& f, int m, int n,
                                   const RadicalScalar& c);
  static GrassmannElement scalar(const RadicalScalar& c);

  const CycloField& field() const { return *f_; }
  const std::map<std::pair<int, int>, RadicalScalar>& coeffs() const {
    return c_;
  }
  // Coefficient of zbar^m z^n (zero element of the ring when absent).
  RadicalScalar coefficient(int m, int n) const;

  bool is_zero() const { return c_.empty(); }

  GrassmannElement operator-() const;
  GrassmannElement operator+(const GrassmannElement& o) const;
  GrassmannElement operator-(const GrassmannElement& o) const;
  /// Noncommutative product: concatenates and reorders to canonical form,
  /// inserting one q^(1/2) per transposition of a z across a zbar; any
  /// exponent reaching k kills the term.
  GrassmannElement operator*(const GrassmannElement& o) const;
  GrassmannElement& operator+=(const GrassmannElement& o) {
    return *this = *this + o;
  }
  GrassmannElement& operator*=(const GrassmannElement& o) {
    return *this = *this * o;
  }
  GrassmannElement scale(const RadicalScalar& s) const;
  GrassmannElement pow(int e) const;

  bool operator==(const GrassmannElement& o) const {
    return f_ == o.f_ && c_ == o.c_;
  }
  bool operator!=(const GrassmannElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  const CycloField* f_;
  std::map<std::pair<int, int>, RadicalScalar> c_;

  void add_term(int m, int n, const RadicalScalar& c);
  friend GrassmannElement d_z(const GrassmannElement&, CrossingPhase);
  friend GrassmannElement d_zbar(const GrassmannElement&);
  friend GrassmannElement berezin_z(const GrassmannElement&);
  friend GrassmannElement berezin_zbar(const GrassmannElement&);
};

inline GrassmannElement g_mul(const GrassmannElement& a,
                              const GrassmannElement& b) {
  return a * b;
}

/// d_z(zbar^m z^n) = q^(alpha*m) [n]_q zbar^m z^(n-1), extended linearly.
GrassmannElement d_z(const GrassmannElement& a,
                     CrossingPhase alpha = CrossingPhase::half);
/// d_zbar(zbar^m z^n) = [m]_qbar zbar^(m-1) z^n (leftmost factor, no
/// crossing).
GrassmannElement d_zbar(const GrassmannElement& a);

/// Coefficient of z^(k-1) (a zbar-only element); plain extraction on the
/// canonical form, no reordering phase.
GrassmannElement berezin_z(const GrassmannElement& a);
/// Coefficient of zbar^(k-1) (a z-only element).
GrassmannElement berezin_zbar(const GrassmannElement& a);

/// Left-multiplication by the given element as a k^2 x k^2 exact matrix on
/// the monomial basis, index (m, n) -> m*k + n.
RadMatrix left_mul_matrix(const GrassmannElement& a);
/// Matrix of d_z (with the given crossing phase) on the same basis.
RadMatrix d_z_matrix(int k, CrossingPhase alpha = CrossingPhase::half);
RadMatrix d_zbar_matrix(int k);

/// Verifies that the four maps realize the algebra: the q- and qbar-sector
/// commutation identities on the single-variable subspaces they are defined
/// on, the graded form of the q-sector identity on the full space, degree-k
/// nilpotency of all four maps, and both mixed-sector exchange images.
Report realization_check(int k, CrossingPhase alpha = CrossingPhase::half);

}  // namespace sigmaq

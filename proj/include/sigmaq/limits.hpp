#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace sigmaq {

/// [n]_Q = (1 - Q^n)/(1 - Q), switching to the n-term sum when Q is within
/// 1e-8 of 1 to avoid the 0/0 form.
std::complex<double> q_number_f(std::complex<double> Q, long n);
/// [n]_Q! = [1]_Q ... [n]_Q. Throws std::range_error when the running
/// product leaves the finite double range.
std::complex<double> q_factorial_f(std::complex<double> Q, long n);

/// Q approaching the k-th root of unity along the radial path q*e^eps,
/// which keeps |Q| off the unit circle for eps > 0.
std::complex<double> q_on_radial_path(int k, double eps);

struct ConvergenceRow {
  double eps = 0.0;
  double error = 0.0;
};

/// One (k, r, s, family) convergence experiment over an eps schedule.
/// `exact` marks families whose error vanishes identically (degenerate
/// parameter choices); the slope is fitted only for inexact rows.
struct ConvergenceTable {
  int k = 0;
  int r = 0;
  int s = 0;
  std::string family;
  std::vector<ConvergenceRow> rows;
  bool exact = false;
  std::optional<double> slope;  // log-log least squares, absent when exact

  bool slope_in(double lo, double hi) const {
    return exact || (slope && *slope >= lo && *slope <= hi);
  }
  double final_error() const { return rows.empty() ? 0.0 : rows.back().error; }
};

/// |[k]_Q / [rk]_Q - 1/r| along the path; r >= 1.
ConvergenceTable ratio_scale_limit(int k, int r,
                                   const std::vector<double>& eps);
/// |[s]_Q / [rk+s]_Q - 1| along the path; meaningful for 1 <= s <= k-1
/// (at s = 0 both q-numbers vanish and the displayed ratio is vacuous).
ConvergenceTable ratio_shift_limit(int k, int r, int s,
                                   const std::vector<double>& eps);
/// |[rk+s]_Q! / ([s]_Q! ([k]_Q!)^r r!) - 1|: the scalar core of the
/// coefficient factorization, exact at r = 0.
ConvergenceTable factorization_check(int k, int r, int s,
                                     const std::vector<double>& eps);

/// The tables applicable to the given (k, r, s).
std::vector<ConvergenceTable> limit_suite(int k, int r, int s,
                                          const std::vector<double>& eps);

/// Q-deformed coherent state amplitudes Z^n / sqrt([n]_Q!) for
/// n = 0 .. levels-1, with the factorial root taken factor-wise so that
/// amp(n+1)/amp(n) = Z/sqrt([n+1]_Q) exactly.
struct DeformedKet {
  std::complex<double> Q;
  std::complex<double> Z;
  std::vector<std::complex<double>> amps;
};

DeformedKet deformed_ket(std::complex<double> Q, std::complex<double> Z,
                         int levels);

/// Rank-1 product of a bosonic coherent state (levels r = 0 .. R-1) with
/// the k-fermionic coefficient vector; the joint amplitude at Fock level
/// r*k + s factorizes as boson[r] * kferm[s] by construction.
struct SuperCoherentState {
  int k = 0;
  std::complex<double> alpha;
  std::vector<std::complex<double>> boson;
  std::vector<std::complex<double>> kferm;

  std::complex<double> joint(int level) const {
    int r = level / k;
    int s = level % k;
    return boson[static_cast<size_t>(r)] * kferm[static_cast<size_t>(s)];
  }
  int levels() const {
    return k * static_cast<int>(boson.size());
  }
};

SuperCoherentState assemble_super_state(int k, std::complex<double> alpha,
                                        int truncation);

/// Least-squares slope of log(error) against log(eps). Requires at least
/// two strictly positive errors.
double fit_loglog_slope(const std::vector<ConvergenceRow>& rows);

}  // namespace sigmaq

#include "sigmaq/limits.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sigmaq/radical.hpp"

namespace sigmaq {

namespace {

constexpr double kNearOne = 1e-8;

bool finite(std::complex<double> v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

double factorial_d(int r) {
  double acc = 1.0;
  for (int j = 2; j <= r; ++j) acc *= j;
  return acc;
}

}  // namespace

std::complex<double> q_number_f(std::complex<double> Q, long n) {
  if (std::abs(1.0 - Q) < kNearOne) {
    std::complex<double> acc(0.0, 0.0);
    std::complex<double> p(1.0, 0.0);
    for (long j = 0; j < n; ++j) {
      acc += p;
      p *= Q;
    }
    return acc;
  }
  return (1.0 - std::pow(Q, static_cast<double>(n))) / (1.0 - Q);
}

std::complex<double> q_factorial_f(std::complex<double> Q, long n) {
  std::complex<double> acc(1.0, 0.0);
  for (long j = 1; j <= n; ++j) {
    acc *= q_number_f(Q, j);
    if (!finite(acc))
      throw std::range_error("q-factorial overflowed double range");
  }
  return acc;
}

std::complex<double> q_on_radial_path(int k, double eps) {
  double theta = 2.0 * std::numbers::pi / k;
  return std::polar(std::exp(eps), theta);
}

double fit_loglog_slope(const std::vector<ConvergenceRow>& rows) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows)
    if (r.error > 0.0) pts.emplace_back(std::log(r.eps), std::log(r.error));
  if (pts.size() < 2)
    throw std::invalid_argument("slope fit needs two nonzero errors");
  double mx = 0.0, my = 0.0;
  for (auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double num = 0.0, den = 0.0;
  for (auto& [x, y] : pts) {
    num += (x - mx) * (y - my);
    den += (x - mx) * (x - mx);
  }
  return num / den;
}

namespace {

constexpr double kExactCutoff = 1e-13;

template <typename ErrFn>
ConvergenceTable run_table(int k, int r, int s, const char* family,
                           const std::vector<double>& eps, ErrFn err) {
  ConvergenceTable t;
  t.k = k;
  t.r = r;
  t.s = s;
  t.family = family;
  for (double e : eps) t.rows.push_back({e, err(e)});
  t.exact = true;
  for (const auto& row : t.rows)
    if (row.error > kExactCutoff) t.exact = false;
  if (!t.exact) t.slope = fit_loglog_slope(t.rows);
  return t;
}

}  // namespace

ConvergenceTable ratio_scale_limit(int k, int r,
                                   const std::vector<double>& eps) {
  if (r < 1) throw std::invalid_argument("ratio [k]_Q/[rk]_Q needs r >= 1");
  return run_table(k, r, 0, "ratio-scale", eps, [&](double e) {
    std::complex<double> Q = q_on_radial_path(k, e);
    std::complex<double> ratio = q_number_f(Q, k) / q_number_f(Q, 1L * r * k);
    return std::abs(ratio - 1.0 / r);
  });
}

ConvergenceTable ratio_shift_limit(int k, int r, int s,
                                   const std::vector<double>& eps) {
  if (s < 1 || s > k - 1)
    throw std::invalid_argument("ratio [s]_Q/[rk+s]_Q needs 1 <= s <= k-1");
  return run_table(k, r, s, "ratio-shift", eps, [&](double e) {
    std::complex<double> Q = q_on_radial_path(k, e);
    std::complex<double> ratio =
        q_number_f(Q, s) / q_number_f(Q, 1L * r * k + s);
    return std::abs(ratio - 1.0);
  });
}

ConvergenceTable factorization_check(int k, int r, int s,
                                     const std::vector<double>& eps) {
  if (r < 0 || s < 0 || s > k - 1)
    throw std::invalid_argument("factorization needs r >= 0, 0 <= s <= k-1");
  return run_table(k, r, s, "factorization", eps, [&](double e) {
    std::complex<double> Q = q_on_radial_path(k, e);
    std::complex<double> num = q_factorial_f(Q, 1L * r * k + s);
    std::complex<double> den =
        q_factorial_f(Q, s) *
        std::pow(q_factorial_f(Q, k), static_cast<double>(r)) *
        factorial_d(r);
    if (!finite(den) || den == std::complex<double>(0.0, 0.0))
      throw std::range_error("factorization denominator left double range");
    std::complex<double> ratio = num / den;
    if (!finite(ratio))
      throw std::range_error("factorization ratio left double range");
    return std::abs(ratio - 1.0);
  });
}

std::vector<ConvergenceTable> limit_suite(int k, int r, int s,
                                          const std::vector<double>& eps) {
  std::vector<ConvergenceTable> out;
  if (r >= 1) out.push_back(ratio_scale_limit(k, r, eps));
  if (s >= 1) out.push_back(ratio_shift_limit(k, r, s, eps));
  out.push_back(factorization_check(k, r, s, eps));
  return out;
}

DeformedKet deformed_ket(std::complex<double> Q, std::complex<double> Z,
                         int levels) {
  if (levels < 1) throw std::invalid_argument("truncation must be >= 1");
  DeformedKet ket{Q, Z, {}};
  // The root of [n]_Q! is taken factor-wise, amp(n) = amp(n-1) Z/sqrt([n]_Q),
  // matching the ladder action; a principal root of the whole factorial can
  // land on the other branch.
  ket.amps.push_back({1.0, 0.0});
  for (int n = 1; n < levels; ++n) {
    std::complex<double> amp =
        ket.amps.back() * Z / std::sqrt(q_number_f(Q, n));
    if (!finite(amp))
      throw std::range_error("deformed amplitude left double range");
    ket.amps.push_back(amp);
  }
  return ket;
}

SuperCoherentState assemble_super_state(int k, std::complex<double> alpha,
                                        int truncation) {
  if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
  SuperCoherentState st;
  st.k = k;
  st.alpha = alpha;
  std::complex<double> apow(1.0, 0.0);
  for (int r = 0; r < truncation; ++r) {
    if (r > 0) apow *= alpha;
    st.boson.push_back(apow / std::sqrt(factorial_d(r)));
  }
  const CycloField& f = CycloField::get(k);
  for (int s = 0; s < k; ++s)
    st.kferm.push_back(RadicalScalar::sqrt_q_factorial(f, s)
                           .invert_monomial()
                           .to_complex());
  return st;
}

}  // namespace sigmaq

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "sigmaq/limits.hpp"

using namespace sigmaq;

namespace {

const std::vector<double> kEps{1e-2, 1e-3, 1e-4};

bool close(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol;
}

}  // namespace

TEST_SUITE("limits") {

TEST_CASE("q-number values at generic deformation") {
  CHECK(close(q_number_f({2.0, 0.0}, 3), {7.0, 0.0}, 1e-14));
  CHECK(close(q_number_f({0.5, 0.0}, 4), {1.875, 0.0}, 1e-14));
  CHECK(close(q_number_f({1.0, 0.0}, 5), {5.0, 0.0}, 1e-14));  // sum form
}

TEST_CASE("closed form agrees with the term sum") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> mag(0.2, 1.8);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * std::numbers::pi);
  for (int i = 0; i < 60; ++i) {
    std::complex<double> Q = std::polar(mag(rng), arg(rng));
    if (std::abs(1.0 - Q) < 1e-3) continue;
    for (long n : {0L, 1L, 4L, 9L}) {
      std::complex<double> sum(0.0, 0.0), p(1.0, 0.0);
      for (long j = 0; j < n; ++j) {
        sum += p;
        p *= Q;
      }
      CHECK(close(q_number_f(Q, n), sum, 1e-11 * (1.0 + std::abs(sum))));
    }
  }
}

TEST_CASE("factorial magnitude collapses at the root of unity") {
  // [k]_Q! -> 0 as Q -> q.
  int k = 3;
  double prev = 1e300;
  for (double eps : kEps) {
    double mag = std::abs(q_factorial_f(q_on_radial_path(k, eps), k));
    CHECK(mag < prev);
    prev = mag;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("factorial overflow guard") {
  // 1e300^4 leaves the double range.
  CHECK_THROWS_AS(q_factorial_f({1e300, 0.0}, 4), std::range_error);
}

TEST_CASE("scale ratio converges to 1/r") {
  ConvergenceTable t = ratio_scale_limit(3, 2, kEps);
  CHECK(!t.exact);
  REQUIRE(t.slope.has_value());
  CHECK(*t.slope == doctest::Approx(1.0).epsilon(0.2));
  CHECK(t.final_error() < 1e-2);
  // r = 1 is the identical ratio, exact for every eps.
  ConvergenceTable u = ratio_scale_limit(4, 1, kEps);
  CHECK(u.exact);
  CHECK(u.slope_in(0.8, 1.2));
}

TEST_CASE("shift ratio converges to 1") {
  ConvergenceTable t = ratio_shift_limit(3, 1, 1, kEps);
  CHECK(t.slope_in(0.8, 1.2));
  CHECK(t.final_error() < 1e-2);
  CHECK_THROWS_AS(ratio_shift_limit(3, 1, 0, kEps), std::invalid_argument);
}

TEST_CASE("coefficient factorization ratio") {
  ConvergenceTable t = factorization_check(3, 1, 1, kEps);
  CHECK(!t.exact);
  CHECK(t.slope_in(0.8, 1.2));
  CHECK(t.final_error() < 1e-2);
  ConvergenceTable u = factorization_check(2, 2, 0, kEps);
  CHECK(u.slope_in(0.8, 1.2));
  CHECK(u.final_error() < 1e-2);
  // Empty product at r = 0: the ratio is 1 identically.
  ConvergenceTable v = factorization_check(4, 0, 2, kEps);
  CHECK(v.exact);
}

TEST_CASE("limit_suite gates the shift family to s >= 1") {
  auto at_s0 = limit_suite(3, 2, 0, kEps);
  CHECK(at_s0.size() == 2);  // scale + factorization
  auto at_s1 = limit_suite(3, 2, 1, kEps);
  CHECK(at_s1.size() == 3);
}

TEST_CASE("deformed ket amplitude recurrence") {
  std::complex<double> Q = q_on_radial_path(4, 1e-3);
  std::complex<double> Z{0.3, 0.7};
  DeformedKet ket = deformed_ket(Q, Z, 12);
  CHECK(close(ket.amps[0], {1.0, 0.0}, 0.0));
  for (int n = 0; n + 1 < 12; ++n) {
    std::complex<double> want = Z / std::sqrt(q_number_f(Q, n + 1));
    CHECK(close(ket.amps[static_cast<size_t>(n + 1)] /
                    ket.amps[static_cast<size_t>(n)],
                want, 1e-12));
  }
}

TEST_CASE("super-coherent state assembly") {
  SuperCoherentState st = assemble_super_state(2, {0.0, 0.0}, 1);
  REQUIRE(st.levels() == 2);
  CHECK(close(st.joint(0), {1.0, 0.0}, 1e-15));
  CHECK(close(st.joint(1), {1.0, 0.0}, 1e-15));

  // Joint amplitudes factor as a rank-1 outer product by construction.
  SuperCoherentState big = assemble_super_state(3, {0.4, -0.2}, 4);
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 3; ++s)
      CHECK(close(big.joint(3 * r + s),
                  big.boson[static_cast<size_t>(r)] *
                      big.kferm[static_cast<size_t>(s)],
                  0.0));
  CHECK_THROWS_AS(assemble_super_state(3, {0.1, 0.0}, 0),
                  std::invalid_argument);
}

TEST_CASE("deformed ket degenerates to the super-coherent product") {
  // With Z matched so that Z^k / sqrt([k]_Q!) = alpha (factor-wise roots),
  // the rescaled amplitudes at level rk+s approach alpha^r/sqrt(r!).
  std::complex<double> alpha{0.7, 0.2};
  for (int k : {2, 3, 5}) {
    double prev = 1e300;
    for (double eps : kEps) {
      std::complex<double> Q = q_on_radial_path(k, eps);
      std::complex<double> root_prod(1.0, 0.0);
      for (int j = 1; j <= k; ++j) root_prod *= std::sqrt(q_number_f(Q, j));
      std::complex<double> Z =
          std::exp((std::log(alpha) + std::log(root_prod)) /
                   static_cast<double>(k));
      DeformedKet ket = deformed_ket(Q, Z, 3 * k);
      SuperCoherentState st = assemble_super_state(k, alpha, 3);
      double worst = 0.0;
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < k; ++s) {
          std::complex<double> got =
              ket.amps[static_cast<size_t>(r * k + s)] /
              ket.amps[static_cast<size_t>(s)];
          worst = std::max(worst,
                           std::abs(got - st.boson[static_cast<size_t>(r)]));
        }
      CHECK(worst < prev);
      prev = worst;
    }
    CHECK(prev < 1e-2);
  }
}

TEST_CASE("slope fit rejects degenerate input") {
  CHECK_THROWS_AS(fit_loglog_slope({{1e-2, 0.0}, {1e-3, 0.0}}),
                  std::invalid_argument);
}

}  // TEST_SUITE

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "sigmaq/cyclotomic.hpp"

using namespace sigmaq;

namespace {

std::complex<double> root_of_unity(int order, long j) {
  double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / order;
  return {std::cos(theta), std::sin(theta)};
}

bool close(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol;
}

}  // namespace

TEST_SUITE("scalar") {

TEST_CASE("zeta powers reduce to canonical form") {
  CHECK(zeta_power(2, 0).is_one());
  // k=2: zeta = exp(2*pi*i/8), zeta^4 = -1.
  CHECK(zeta_power(2, 4) == -Cyclotomic::one(CycloField::get(2)));
  // q^k = 1 for every order.
  CHECK(q_power(3, 3).is_one());
  CHECK(zeta_power(3, 12).is_one());
  CHECK(zeta_power(5, -1) == zeta_power(5, 4 * 5 - 1));
}

TEST_CASE("field degrees match Euler phi of 4k") {
  // (k, phi(4k)) spot checks; the whole canonical form rests on the
  // modulus being the right cyclotomic polynomial.
  const std::pair<int, int> want[] = {{2, 4},  {3, 4},  {4, 8},
                                      {5, 8},  {6, 8},  {8, 16},
                                      {12, 16}, {32, 64}};
  for (auto [k, deg] : want) CHECK(CycloField::get(k).degree() == deg);
}

TEST_CASE("zeta root relations") {
  for (int k = 2; k <= 9; ++k) {
    CHECK(zeta_power(k, 4L * k).is_one());
    CHECK(zeta_power(k, 2L * k) ==
          -Cyclotomic::one(CycloField::get(k)));  // zeta^(2k) = -1
    CHECK(q_half_power(k, 1) * q_half_power(k, 1) == q_power(k, 1));
    CHECK((zeta_power(k, 1) * zeta_power(k, 1)) == q_half_power(k, 1));
  }
}

TEST_CASE("q_number basic values") {
  // k=4: q = i, [2]_q = 1 + i.
  const CycloField& f4 = CycloField::get(4);
  Cyclotomic expected = Cyclotomic::one(f4) + zeta_power(4, 4);
  CHECK(q_number(4, 2) == expected);
  CHECK(q_number(4, 0).is_zero());
  // [k]_q = 0 exactly; exercises reduction modulo the cyclotomic polynomial.
  for (int k = 2; k <= 12; ++k) CHECK(q_number(k, k).is_zero());
}

TEST_CASE("conjugate q_number against float oracle") {
  // [2]_qbar at k=3 must evaluate to 1 + exp(-2*pi*i/3).
  std::complex<double> oracle = 1.0 + root_of_unity(3, -1);
  CHECK(close(q_number(3, 2, true).to_complex(), oracle, 1e-12));
}

TEST_CASE("q_factorial values") {
  CHECK(q_factorial(5, 0).is_one());
  CHECK(q_factorial(2, 1).is_one());
  // n >= k collapses to zero through the [k]_q factor.
  CHECK(q_factorial(3, 3).is_zero());
  CHECK(q_factorial(6, 9).is_zero());
  // [2]_qbar! = q^{-1} [2]_q! at k=3.
  CHECK(q_factorial(3, 2, true) == q_power(3, -1) * q_factorial(3, 2));
}

TEST_CASE("factorial phase identity across orders") {
  for (int k = 2; k <= 12; ++k) {
    for (int n = 0; n < k; ++n) {
      long e = -static_cast<long>(n) * (n - 1) / 2;
      CHECK(q_factorial(k, n, true) == q_power(k, e) * q_factorial(k, n));
      if (n >= 1)
        CHECK(q_number(k, n, true) == q_power(k, -(n - 1)) * q_number(k, n));
    }
  }
}

TEST_CASE("field arithmetic and inverses") {
  for (int k : {2, 3, 4, 5, 8, 12}) {
    const CycloField& f = CycloField::get(k);
    Cyclotomic a = q_number(k, 2) + zeta_power(k, 3);
    Cyclotomic b = zeta_power(k, 1) - Cyclotomic::from_rational(f, Rational(1, 3));
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    if (!b.is_zero()) CHECK((b * b.inverse()).is_one());
    CHECK_THROWS_AS(Cyclotomic::zero(f).inverse(), std::domain_error);
  }
}

TEST_CASE("conjugation is an involution and matches floats") {
  for (int k : {2, 3, 5, 7}) {
    Cyclotomic a = q_number(k, 2) * zeta_power(k, 5);
    CHECK(a.conj().conj() == a);
    CHECK(close(a.conj().to_complex(), std::conj(a.to_complex()), 1e-12));
  }
}

TEST_CASE("float export of named constants") {
  CHECK(close(Cyclotomic::one(CycloField::get(3)).to_complex(), {1.0, 0.0},
              1e-15));
  CHECK(close(q_power(4, 1).to_complex(), {0.0, 1.0}, 1e-14));
  for (int k = 2; k <= 8; ++k)
    CHECK(close(zeta_power(k, 1).to_complex(), root_of_unity(4 * k, 1),
                1e-13));
}

TEST_CASE("order mismatch is rejected") {
  Cyclotomic a = q_power(3, 1);
  Cyclotomic b = q_power(4, 1);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("canonical rendering") {
  CHECK(Cyclotomic::zero(CycloField::get(3)).str() == "0");
  CHECK(Cyclotomic::one(CycloField::get(3)).str() == "1");
  CHECK(q_number(4, 2).str() == "1 + z^4");
  CHECK((-q_number(4, 2)).str() == "-1 - z^4");
  CHECK(Cyclotomic::from_rational(CycloField::get(2), Rational(1, 2)).str() ==
        "1/2");
}

}  // TEST_SUITE

#include "helpers.hpp"

using namespace t;

TEST_CASE("x-law coefficients") {
  CHECK(comm_coeff_B(-1, 1) == -1);
  CHECK(comm_coeff_B(2, 1) == 2);
  for (long m = -6; m <= 6; ++m) CHECK(comm_coeff_B(m, 0) == 1);
}

TEST_CASE("y-law coefficients match the odd and y^-2 laws") {
  // y f = sum (2k)!/(2^k k!^2) delta^k(f) y^{2k+1}
  for (long u = 0; u <= 12; ++u)
    CHECK(comm_coeff_C(1, u) == ratio(factorial(2 * u), factorial(u) * factorial(u) * (Int(1) << u)));
  CHECK(comm_coeff_C(-2, 0) == 1);
  CHECK(comm_coeff_C(-2, 1) == -2);
  for (long u = 2; u <= 8; ++u) CHECK(comm_coeff_C(-2, u) == 0);
}

TEST_CASE("convolution of the commutation coefficients") {
  for (long i = -7; i <= 7; ++i)
    for (long j = -7; j <= 7; ++j)
      for (long u = 0; u <= 20; ++u) {
        Rat s = 0;
        for (long a = 0; a <= u; ++a) s += comm_coeff_C(i, a) * comm_coeff_C(j, u - a);
        REQUIRE(s == comm_coeff_C(i + j, u));
      }
  for (long m = -10; m <= 10; ++m)
    for (long u = 0; u <= 20; ++u) REQUIRE(comm_coeff_B(m, u) == comm_coeff_C(2 * m, u) * rat_pow(Rat(2), -u));
}

TEST_CASE("omega") {
  CHECK(omega(1, 1) == q(3, 4));
  CHECK(omega(-2, 1) == 0);
  CHECK(omega(2, 2) == 6);
  CHECK(omega(0, 1) == 0);
  // y . gamma coefficients (2u+1)!(2u)!/(16^u u!^3)
  for (long u = 0; u <= 10; ++u) {
    Int f = factorial(u);
    CHECK(omega(1, u) == ratio(factorial(2 * u + 1) * factorial(2 * u), f * f * f) * rat_pow(Rat(16), -u));
  }
  for (long k = 1; k <= 6; ++k)
    for (long u = k; u <= k + 4; ++u) CHECK(omega(-2 * k, u) == 0);
}

TEST_CASE("rho") {
  CHECK(rho(1) == 1);
  CHECK(rho(2) == q(3, 4));
  CHECK(rho(3) == q(45, 32));
  CHECK_THROWS_AS(rho(0), error);
  // y . gamma = sum rho_j / c (c/s)^j y^{2j-1}: rho_j = omega(1, j-1)
  for (long j = 1; j <= 15; ++j) CHECK(rho(j) == omega(1, j - 1));
}

TEST_CASE("lift coefficients") {
  CHECK(lift_coeff(1, 1) == q(-3, 4));
  CHECK(lift_coeff(3, 1) == q(-5, 4));
  CHECK(lift_coeff(0, 2) == 0);
  CHECK(lift_coeff(0, 0) == 1);
  CHECK_THROWS_WITH_AS(lift_coeff(-3, 0), doctest::Contains("NegativeOddWeight"), error);
  CHECK_THROWS_AS(lift_coeff(-1, 2), error);

  SUBCASE("two-term recurrence for m >= 1") {
    for (long m = 1; m <= 12; ++m)
      for (long n = 1; n <= 12; ++n)
        CHECK(lift_coeff(m, n) * (4 * n * (m + n - 1)) == -lift_coeff(m, n - 1) * ((m + 2 * n - 2) * (m + 2 * n)));
  }
  SUBCASE("odd closed form") {
    for (long k = 0; k <= 6; ++k)
      for (long n = 0; n <= 10; ++n) {
        Int fk = factorial(k), fkn = factorial(k + n);
        Rat c = ratio(fk * fk * factorial(2 * k + 2 * n + 1) * factorial(2 * k + 2 * n),
                      factorial(2 * k + 1) * factorial(n) * factorial(n + 2 * k) * fkn * fkn) *
                rat_pow(Rat(16), -n);
        if (n % 2) c = -c;
        CHECK(lift_coeff(2 * k + 1, n) == c);
      }
  }
  SUBCASE("even closed forms") {
    for (long k = 1; k <= 6; ++k)
      for (long n = 0; n <= 10; ++n) {
        Rat c = ratio(factorial(2 * k - 1) * factorial(n + k - 1), factorial(n + 2 * k - 1) * factorial(k - 1)) *
                binomial(-k - 1, n);
        CHECK(lift_coeff(2 * k, n) == c);
      }
    for (long k = 1; k <= 6; ++k)
      for (long n = 0; n <= k; ++n) {
        Rat c = ratio(factorial(k) * factorial(2 * k - n), factorial(k - n) * factorial(2 * k)) * binomial(k - 1, n);
        CHECK(lift_coeff(-2 * k, n) == c);
      }
  }
  SUBCASE("negative even weights terminate") {
    for (long k = 1; k <= 6; ++k) {
      for (long n = k; n <= k + 5; ++n) CHECK(lift_coeff(-2 * k, n) == 0);
      CHECK(lift_coeff(-2 * k, k - 1) != 0);
    }
  }
}

TEST_CASE("gamma tuples") {
  for (long k = 1; k <= 5; ++k)
    CHECK(gamma_tuple(k, 0, std::vector<long>(k, 0), gamma_method::A2) == ratio(factorial(2 * k - 2), factorial(k - 1)));
  CHECK(gamma_tuple(1, 1, {1}, gamma_method::A2) == 0);
  CHECK(gamma_tuple(2, 1, {1, 0}, gamma_method::A2) == 0);
  CHECK(gamma_tuple(2, 1, {0, 1}, gamma_method::A2) == 0);
  CHECK_THROWS_WITH_AS(gamma_tuple(1, 0, {0}, gamma_method::A1), doctest::Contains("EdgeCaseA1"), error);
  for (long k = 2; k <= 4; ++k)
    for (long i = 0; i <= 4; ++i)
      for (const auto& tup : compositions(i, k))
        REQUIRE(gamma_tuple(k, i, tup, gamma_method::A1) == gamma_tuple(k, i, tup, gamma_method::A2));
}

TEST_CASE("compositions") {
  CHECK(compositions(0, 3).size() == 1);
  CHECK(compositions(2, 2).size() == 3);
  CHECK(compositions(4, 3).size() == 15);
  for (const auto& c : compositions(5, 3)) {
    long s = 0;
    for (long x : c) s += x;
    CHECK(s == 5);
  }
}

TEST_CASE("generalized binomials and factorials") {
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-3, 2) == 6);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(inv_factorial(-2) == 0);
  CHECK_THROWS_AS(factorial(-1), error);
  CHECK(to_string(binomial(10, 4)) == "210/1");
  Rat r = ratio(24, 6);
  CHECK(r.get_den() == 1);
}

#include "helpers.hpp"
#include "pdo/random.hpp"

using namespace t;

namespace {
GradedElem chi_pow(const GradedRing& R, long e) {
  GradedElem r(Rat(1));
  for (long i = 0; i < e; ++i) r = r * R.gen("chi");
  return r;
}
}  // namespace

TEST_CASE("powers of u") {
  GradedRing R = chi_ring();
  GradedSeries u = u_power(R, 0, 1, Order::at(12));
  for (long n = 0; 2 * n + 2 < 12; ++n) CHECK(u.coefficient(2 * n + 2) == R.gen("chi", static_cast<int>(n)) * Rat(n % 2 ? -1 : 1));
  CHECK(u_power(R, 0, 0, Order::at(6)) == GradedSeries::one(R, Order::at(6)));
  CHECK(u_power(R, 0, 2, Order::at(8)).coefficient(4) == chi_pow(R, 2));
  for (long k = 2; k <= 4; ++k)
    CHECK(agree(u_power(R, 0, k, Order::at(14)), mul(u_power(R, 0, k - 1, Order::at(14)), u, Order::at(14))));
  CHECK_THROWS_WITH_AS(u_power(R, 2, 1, Order::at(6)), doctest::Contains("NotAUnit"), error);
}

TEST_CASE("g forms") {
  GradedRing R = chi_ring();
  GradedElem chi = R.gen("chi");
  for (long k = 1; k <= 6; ++k) CHECK(g_forms(R, 0, k, k)[2 * k] == chi_pow(R, k));
  for (long k = 1; k <= 5; ++k) {
    auto g = g_forms(R, 0, k, k + 5);
    for (long i = 1; i <= 5; i += 2) CHECK(g[2 * k + 2 * i].is_zero());
  }
  auto g2 = g_forms(R, 0, 2, 4);
  CHECK(g2[8] == rc_bracket(R, chi, chi, 2, 2, 2) * q(1, 15));
  for (long k = 2; k <= 6; ++k)
    CHECK(g_forms(R, 0, k, k + 2)[2 * k + 4] ==
          chi_pow(R, k - 2) * rc_bracket(R, chi, chi, 2, 2, 2) * ratio(factorial(k + 2), 72 * (2 * k + 1) * factorial(k - 2)));
}

TEST_CASE("closed gamma form against peeling") {
  GradedRing R = chi_ring();
  for (long k = 1; k <= 5; ++k) {
    auto g = g_forms(R, 0, k, k + 6);
    for (long i = 0; i <= 6; ++i) REQUIRE(g_closed(R, 0, k, i) == g[2 * k + 2 * i]);
  }
  CHECK(g_closed(R, 0, 3, 0) == chi_pow(R, 3));
}

TEST_CASE("decomposition of even invariants") {
  GradedRing R = chi_ring();
  auto d = decompose_even(R, 0, {GradedElem(), R.one()}, Order::at(13));
  CHECK(d.at(2) == R.gen("chi"));
  for (long m = 2; m <= 12; m += 2) CHECK(d.at(m).is_zero() == (m != 2));
  auto one = decompose_even(R, 0, {R.one()}, Order::at(13));
  CHECK(one.components.size() == 1);
  CHECK(one.at(0) == R.one());
  CHECK_THROWS_WITH_AS(decompose_even(R, 0, {R.gen("chi")}, Order::at(9)), doctest::Contains("NotHomogeneous"), error);

  Sampler smp(83);
  for (int t = 0; t < 4; ++t) {
    std::vector<GradedElem> a;
    for (int k = 0; k < 3; ++k) a.push_back(smp.graded(R.spec(), 0, 2, 2));
    auto x = decompose_even(R, 0, a, Order::at(13)), y = decompose_even_oracle(R, 0, a, Order::at(13));
    for (long m = 0; m <= 12; m += 2) REQUIRE(x.at(m) == y.at(m));
  }
}

TEST_CASE("rewriting in powers of u") {
  GradedRing R = chi_ring();
  CHECK(rewrite_in_u(R, 0, GradedSeries::one(R)) == std::vector<GradedElem>{R.one()});
  CHECK(rewrite_in_u(R, 0, u_power(R, 0, 3, Order::at(14))) ==
        std::vector<GradedElem>{GradedElem(), GradedElem(), GradedElem(), R.one()});
  CHECK(rewrite_in_u(R, 0, psi(R, 2, R.gen("chi"), Order::at(12))) == std::vector<GradedElem>{GradedElem(), R.one()});
  CHECK_THROWS_WITH_AS(rewrite_in_u(R, 0, GradedSeries::monomial(R, R.gen("xi"), 1, Order::at(5))),
                       doctest::Contains("NotInvariant"), error);
  CHECK_THROWS_WITH_AS(rewrite_in_u(R, 0, GradedSeries::monomial(R, R.gen("xi"), 2, Order::at(5))),
                       doctest::Contains("NotInvariant"), error);
}

TEST_CASE("u a = sum D^n(a) u^{n+1}, D = -chi^{-1} d") {
  GradedRing R = chi_ring();
  GradedElem a = R.gen("a") * R.gen("b") + R.gen("a");
  Order N = Order::at(14);
  GradedSeries ua = mul(u_power(R, 0, 1, N), GradedSeries::monomial(R, a, 0), N);
  auto c = rewrite_in_u(R, 0, ua);
  GradedElem D = a;
  REQUIRE(c.size() >= 2);
  CHECK(c[0].is_zero());
  for (size_t n = 1; n < c.size(); ++n) {
    CHECK(c[n] == D);
    CHECK((D.is_zero() || R.weight_of(D) == 0));
    D = R.gen("chi", 0, -1) * R.derivative(D) * Rat(-1);
  }
}

TEST_CASE("v uniformizer") {
  GradedRing R = chi_ring();
  GradedElem xi = R.gen("xi");
  GradedSeries v = v_uniformizer(R, 1, 9);
  CHECK(v.valuation() == 1);
  CHECK(v.coefficient(1) == xi);
  Order N = Order::at(10);
  GradedSeries y2xi2 = mul(GradedSeries::monomial(R, R.one(), 2), GradedSeries::monomial(R, xi * xi, 0), N);
  CHECK(same_to(mul(v, v, N), y2xi2, v.order().value() + 1));
  // first correction of y^2 xi^2: 2 delta(xi^2) y^4 = -d(xi^2) y^4
  CHECK(y2xi2.coefficient(4) == R.derivative(xi * xi) * Rat(-1));
  CHECK_THROWS_WITH_AS(v_uniformizer(R, 2, 7), doctest::Contains("NotAUnit"), error);
}

TEST_CASE("negative weights through xi") {
  GradedRing R = chi_ring();
  GradedElem xi = R.gen("xi");
  GradedSeries p2 = psi_neg_via_xi(R, 1, 2, R.gen("xi", 0, -2), 8);
  CHECK(p2.valuation() == -2);
  CHECK(p2.coefficient(-2) == R.gen("xi", 0, -2));
  GradedSeries p1 = psi_neg_via_xi(R, 1, 1, R.gen("xi", 0, -1), 8);
  CHECK(p1.valuation() == -1);
  CHECK(p1.coefficient(-1) == R.gen("xi", 0, -1));
  GradedElem f = R.gen("a") * R.gen("xi", 0, -2);
  GradedSeries diff = psi_neg_via_xi(R, 1, 2, f, 8) - psi(R, -2, f, Order::at(8));
  CHECK((diff.is_zero() || diff.valuation() > -2));
  GradedRing noxi(GradedRingSpec({{"chi", 2, true}, {"xi", 1, false}}));
  CHECK_THROWS_WITH_AS(psi_neg_via_xi(noxi, 1, 1, GradedElem(), 6), doctest::Contains("NotAUnit"), error);
}

#include "helpers.hpp"
#include "pdo/random.hpp"

using namespace t;

TEST_CASE("rational functions") {
  RatFunc x = z();
  CHECK((x * x).derivative() == x * Rat(2));
  RatFunc zp1 = x + RatFunc(1);
  CHECK(zp1.inverse() * zp1 == RatFunc(1));
  CHECK(x.inverse().derivative() == -(x * x).inverse());
  CHECK_THROWS_WITH_AS(RatFunc().inverse(), doctest::Contains("DivisionByZero"), error);
  // canonical form: monic denominator, reduced
  RatFunc r = rf({q(2), q(2)}, {q(4), q(4)});
  CHECK(r == RatFunc(q(1, 2)));
  RatFunc s = rf({q(1)}, {q(0), q(3)});
  CHECK(s.den().lead() == 1);
  CHECK(s.num()[0] == q(1, 3));
  CHECK(x.pow(-2) * x.pow(2) == RatFunc(1));
  CHECK(x.derivative_nilpotency() == 2);
  CHECK(!x.inverse().derivative_nilpotency());
  CHECK(rf({q(1)}, {q(1), q(0), q(1)}).str() == "(1)/(z^2 + 1)");
}

TEST_CASE("sum with shared denominator factors reduces") {
  RatFunc a = rf({q(1)}, {q(-1), q(1)}), b = rf({q(-1)}, {q(-1), q(1)});
  CHECK((a + b).is_zero());
  RatFunc c = rf({q(1)}, {q(0), q(-1), q(1)});  // 1/(z(z-1))
  RatFunc d = rf({q(-1)}, {q(0), q(1)}) + rf({q(1)}, {q(-1), q(1)});
  CHECK(c == d);
}

TEST_CASE("unimodular matrices and composition") {
  CHECK_THROWS_WITH_AS(GMatrix(1, 1, 1, 1), doctest::Contains("NotUnimodular"), error);
  CHECK(mobius_compose(z(), T) == z() + RatFunc(1));
  CHECK(mobius_compose(z(), S) == -z().inverse());
  CHECK(mobius_compose(rf({q(1)}, {q(-1), q(1)}), T) == z().inverse());
  CHECK(T * T.inverse() == GMatrix::identity());
}

TEST_CASE("right action, chain rule, and the s-cocycle on random data") {
  Sampler smp(101);
  for (int i = 0; i < 50; ++i) {
    RatFunc f = smp.ratfunc();
    GMatrix g = smp.gmatrix(), h = smp.gmatrix();
    REQUIRE(mobius_compose(mobius_compose(f, g), h) == mobius_compose(f, g * h));
    REQUIRE(mobius_compose(f, g).derivative() == g.s().pow(-2) * mobius_compose(f.derivative(), g));
    REQUIRE((g * h).s() == mobius_compose(g.s(), h) * h.s());
  }
}

TEST_CASE("graded ring basics") {
  GradedRing R = chi_ring();
  GradedElem chi = R.gen("chi");
  CHECK(R.derivative(chi * chi) == chi * R.gen("chi", 1) * Rat(2));
  CHECK(R.unit_inverse(chi) * chi == R.one());
  CHECK(R.derivative(R.gen("chi", 0, -1)) == -(R.gen("chi", 0, -2) * R.gen("chi", 1)));
  CHECK(R.weight_of(chi * chi) == 4);
  CHECK(R.weight_of(chi * R.gen("chi", 1)) == 6);
  CHECK(!R.weight_of(chi + chi * chi));
  CHECK_THROWS_WITH_AS(R.check_weight(chi + chi * chi, 2), doctest::Contains("NotHomogeneous"), error);
  CHECK_THROWS_WITH_AS(R.weight_of(GradedElem()), doctest::Contains("ZeroElement"), error);
  CHECK_THROWS_WITH_AS(R.unit_inverse(chi + R.gen("xi") * R.gen("xi")), doctest::Contains("NotAUnit"), error);
  CHECK_THROWS_WITH_AS(R.gen("a", 0, -1), doctest::Contains("NotAUnit"), error);
  CHECK_THROWS_AS(GradedRingSpec({{"x", 1, false}, {"x", 2, false}}), error);
  CHECK(R.derivative_nilpotency(R.constant(q(3))) == 1);
  CHECK(!R.derivative_nilpotency(chi));
  CHECK(R.str(chi * R.gen("chi", 2)) == "chi*chi^(2)");
}

TEST_CASE("grading is additive and the derivative adds two") {
  GradedRing R = chi_ring();
  Sampler smp(5);
  for (int i = 0; i < 30; ++i) {
    long wa = smp.integer(0, 6), wb = smp.integer(-2, 6);
    GradedElem a = smp.graded(R.spec(), wa), b = smp.graded(R.spec(), wb);
    if (a.is_zero() || b.is_zero()) continue;
    REQUIRE(R.weight_of(a) == wa);
    REQUIRE(R.weight_of(a * b) == wa + wb);
    GradedElem da = R.derivative(a);
    if (!da.is_zero()) REQUIRE(R.weight_of(da) == wa + 2);
  }
}

TEST_CASE("Leibniz rule in the graded ring") {
  GradedRing R = chi_ring();
  Sampler smp(9);
  for (int i = 0; i < 20; ++i) {
    GradedElem a = smp.graded(R.spec(), 2), b = smp.graded(R.spec(), 0);
    REQUIRE(R.derivative(a * b) == R.derivative(a) * b + a * R.derivative(b));
  }
}

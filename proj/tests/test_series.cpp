#include "helpers.hpp"
#include "pdo/random.hpp"

using namespace t;

namespace {
RationalFunctions Q;
QzSeries mono(const RatFunc& f, long e, Order o = Order::exact()) { return QzSeries::monomial(Q, f, e, o); }
}  // namespace

TEST_CASE("odd law: y z") {
  QzSeries p = mul(mono(1, 1), mono(z(), 0), Order::at(9));
  CHECK(p.coefficient(1) == z());
  CHECK(p.coefficient(3) == RatFunc(q(-1, 2)));
  CHECK(p.coefficient(5).is_zero());
  CHECK(p.coefficient(7).is_zero());
  // y z is exact: the derivative of z dies
  CHECK(mul(mono(1, 1), mono(z(), 0)).is_exact());
}

TEST_CASE("y^-2 law and the x^-1 law are exact") {
  Sampler smp(3);
  for (int i = 0; i < 10; ++i) {
    RatFunc f = smp.ratfunc();
    QzSeries a = mul(mono(1, -2), mono(f, 0));
    REQUIRE(a.is_exact());
    QzSeries want = mono(f, -2) + mono(f.derivative(), 0);  // -2 delta = d/dz
    REQUIRE(a == want);
    REQUIRE(a - mul(mono(f, 0), mono(1, -2)) == mono(f.derivative(), 0));
  }
}

TEST_CASE("an infinite exact product is refused") {
  CHECK_THROWS_WITH_AS(mul(mono(1, 1), mono(z().inverse(), 0)), doctest::Contains("PrecisionRequired"), error);
}

TEST_CASE("addition and the zero series") {
  QzSeries qq(Q, 2, {z(), RatFunc(), z() * z()}, Order::at(7));
  CHECK(qq + QzSeries(Q) == qq);
  QzSeries d = qq - qq;
  CHECK(d.is_zero());
  CHECK(d.valuation() == 7);
  CHECK(mono(z(), 1) + mono(z() * z(), 1) == mono(z() + z() * z(), 1));
  CHECK_THROWS_WITH_AS(GradedSeries(chi_ring()) + GradedSeries(GradedRing(GradedRingSpec({{"F", 1, false}}))),
                       doctest::Contains("RingMismatch"), error);
  CHECK_THROWS_WITH_AS(qq.coefficient(7), doctest::Contains("PrecisionRequired"), error);
}

TEST_CASE("inverse") {
  CHECK(inverse(mono(1, 2)) == mono(1, -2));
  // ((cz+d)^2 x^-1)^-1 = sum (n+1)! s^-2 (c/s)^n x^{n+1}
  for (const GMatrix& g : {L, U}) {
    RatFunc s = g.s(), cr = s.inverse() * g.c();
    QzSeries inv = inverse(mono(s * s, -2), Order::at(16));
    for (long n = 0; 2 * n + 2 < 16; ++n) CHECK(inv.coefficient(2 * n + 2) == s.pow(-2) * cr.pow(n) * Rat(factorial(n + 1)));
  }
  QzSeries u = mono(1, 0) + mono(z(), 1);
  QzSeries ui = inverse(u, Order::at(10));
  CHECK(same_to(mul(ui, u, Order::at(10)), QzSeries::one(Q), 10));
  CHECK_THROWS_WITH_AS(inverse(QzSeries(Q, Order::at(5))), doctest::Contains("NotInvertible"), error);
  GradedRing R = chi_ring();
  CHECK_THROWS_WITH_AS(inverse(GradedSeries::monomial(R, R.gen("a"), 0, Order::at(4))), doctest::Contains("NotInvertible"),
                       error);
}

TEST_CASE("inverse is two-sided") {
  Sampler smp(17);
  for (int i = 0; i < 10; ++i) {
    QzSeries a = smp.qz_series(-3, 3, 10);
    QzSeries ai = inverse(a, Order::at(10));
    long n = ai.order().value() + a.valuation();
    REQUIRE(same_to(mul(a, ai, Order::at(12)), QzSeries::one(Q), std::min(n, 10L)));
    REQUIRE(same_to(mul(ai, a, Order::at(12)), QzSeries::one(Q), std::min(n, 10L)));
  }
}

TEST_CASE("square roots") {
  CHECK(sqrt(mono(1, 2), RatFunc(1)) == mono(1, 1));
  // sqrt(x . gamma) = y . gamma
  for (const GMatrix& g : {L, U}) {
    RatFunc s = g.s();
    QzSeries xg = inverse(mono(s * s, -2), Order::at(14));
    QzSeries r = sqrt(xg, s.inverse());
    CHECK(r.coefficient(1) == s.inverse());
    CHECK(r.coefficient(3) == s.inverse() * (s.inverse() * g.c()) * q(3, 4));
    CHECK(same_to(r, act_y_power(1, g, Order::at(13)), 13));
  }
  CHECK_THROWS_WITH_AS(sqrt(mono(1, 1, Order::at(5)), RatFunc(1)), doctest::Contains("OddValuation"), error);
  CHECK_THROWS_WITH_AS(sqrt(mono(1, 2, Order::at(8)), RatFunc(2)), doctest::Contains("BadRoot"), error);
}

TEST_CASE("square root properties on random data") {
  Sampler smp(23);
  for (int i = 0; i < 8; ++i) {
    long h = smp.integer(-2, 2);
    RatFunc e = smp.ratfunc(1);
    QzSeries rest = smp.qz_series(2 * h + 1, 2 * h + 3, 2 * h + 10);
    QzSeries qq = mono(e * e, 2 * h, Order::at(2 * h + 10)) + rest;
    QzSeries r = sqrt(qq, e), rn = sqrt(qq, -e);
    long n = r.order().value();
    REQUIRE(same_to(mul(r, r, Order::at(2 * h + 10)), qq, n + h));
    REQUIRE(rn == -r);
  }
}

TEST_CASE("associativity on random triples over Q(z)") {
  Sampler smp(31);
  for (int i = 0; i < 30; ++i) {
    Order N = Order::at(12);
    QzSeries a = smp.qz_series(-4, 4, 12), b = smp.qz_series(-4, 4, 12), c = smp.qz_series(-4, 4, 12);
    REQUIRE(agree(mul(mul(a, b, N), c, N), mul(a, mul(b, c, N), N)));
  }
}

TEST_CASE("associativity on random graded triples") {
  Sampler smp(37);
  GradedRing R = chi_ring();
  auto gs = [&](Sampler& s) {
    long v = s.integer(-4, 4);
    std::vector<GradedElem> c;
    for (long e = v; e < 12; ++e) c.push_back(s.graded(R.spec(), s.integer(0, 4)));
    return GradedSeries(R, v, c, Order::at(12));
  };
  for (int i = 0; i < 30; ++i) {
    Order N = Order::at(12);
    GradedSeries a = gs(smp), b = gs(smp), c = gs(smp);
    REQUIRE(agree(mul(mul(a, b, N), c, N), mul(a, mul(b, c, N), N)));
  }
}

TEST_CASE("valuations add and even support is closed") {
  Sampler smp(37);
  for (int i = 0; i < 15; ++i) {
    QzSeries a = smp.qz_series(-3, 3, 10), b = smp.qz_series(-3, 3, 10);
    QzSeries p = mul(a, b, Order::at(10));
    if (!p.is_zero()) REQUIRE(p.valuation() == a.valuation() + b.valuation());
    auto [ae, ao] = split_even_odd(a);
    auto [be, bo] = split_even_odd(b);
    REQUIRE(mul(ae, be, Order::at(10)).is_even());
    REQUIRE(ae + ao == a);
  }
}

TEST_CASE("x^m law against y^{2m}") {
  Sampler smp(41);
  RatFunc f = smp.ratfunc(2);
  for (long m = -5; m <= 5; ++m) {
    Order N = Order::at(2 * m + 12);
    QzSeries viaC = mul(mono(1, 2 * m), mono(f, 0), N);
    std::vector<RatFunc> c;
    RatFunc d = f;
    for (long u = 0; 2 * (m + u) < 2 * m + 12; ++u) {
      if (u) c.push_back(RatFunc());
      c.push_back(d * comm_coeff_B(m, u) * rat_pow(Rat(-1), u));  // d = -d/dz on B
      d = d.derivative();
    }
    REQUIRE(agree(viaC, QzSeries(Q, 2 * m, c, N)));
  }
}

TEST_CASE("split") {
  QzSeries a(Q, 2, {z(), z() * z()}, Order::exact());
  auto [e, o] = split_even_odd(a);
  CHECK(e == mono(z(), 2));
  CHECK(o == mono(z() * z(), 3));
  auto [e2, o2] = split_even_odd(act_y_power(1, U, Order::at(11)));
  CHECK(e2.is_zero());
  CHECK(!o2.is_zero());
}

#include "helpers.hpp"
#include "pdo/io.hpp"
#include "pdo/random.hpp"

using namespace t;
using pdo::io::json;

TEST_CASE("rationals") {
  CHECK(io::to_json(q(3)) == "3/1");
  CHECK(io::to_json(q(-6, 4)) == "-3/2");
  CHECK(io::rat_from_json(json("4/6")) == q(2, 3));
  CHECK(io::rat_from_json(json("7")) == 7);
  CHECK(io::rat_from_json(json(5)) == 5);
  CHECK_THROWS_WITH_AS(io::rat_from_json(json("1/0"), "/x"), doctest::Contains("/x"), io::input_error);
  CHECK_THROWS_AS(io::rat_from_json(json("abc")), io::input_error);
  CHECK_THROWS_AS(io::rat_from_json(json(1.5)), io::input_error);
}

TEST_CASE("round trips") {
  Sampler smp(97);
  for (int i = 0; i < 20; ++i) {
    RatFunc f = smp.ratfunc();
    REQUIRE(io::ratfunc_from_json(json::parse(io::to_json(f).dump())) == f);
    GMatrix g = smp.gmatrix();
    REQUIRE(io::gmatrix_from_json(json::parse(io::to_json(g).dump())) == g);
    QzSeries s = smp.qz_series(-3, 3, 8);
    QzSeries back = io::qz_series_from_json(json::parse(io::to_json(s).dump()));
    REQUIRE(back == s);
    REQUIRE(back.order() == s.order());
  }
  GradedRing R = chi_ring();
  CHECK(io::spec_from_json(io::to_json(R.spec())) == R.spec());
  for (int i = 0; i < 20; ++i) {
    GradedElem e = smp.graded(R.spec(), smp.integer(-2, 6));
    REQUIRE(io::graded_from_json(json::parse(io::to_json(e).dump()), R.spec()) == e);
  }
  GradedSeries u = u_power(R, 0, 2, Order::at(10));
  GradedSeries back = io::graded_series_from_json(json::parse(io::to_json(u).dump()));
  CHECK(back == u);
  CHECK(back.ring() == u.ring());
  auto fam = psi_inverse(u);
  auto fb = io::family_from_json(io::to_json(fam), [&](const json& j, const std::string& p) {
    return io::graded_from_json(j, R.spec(), p);
  });
  CHECK(fb == fam);
  QzSeries ex = QzSeries::monomial(RationalFunctions{}, z(), -2);
  CHECK(io::to_json(ex)["order"] == "exact");
  CHECK(io::qz_series_from_json(io::to_json(ex)) == ex);
}

TEST_CASE("schema") {
  CHECK(io::to_json(z()) == json::parse(R"({"num":["0/1","1/1"],"den":["1/1"]})"));
  CHECK(io::to_json(T) == json::parse(R"([["1/1","1/1"],["0/1","1/1"]])"));
  GradedRing R = chi_ring();
  CHECK(io::to_json(R.gen("chi", 1) * Rat(2)) == json::parse(R"({"terms":[{"c":"2/1","mono":[[0,1,1]]}]})"));
}

TEST_CASE("errors name the offending field") {
  auto msg = [](auto&& fn) {
    try {
      fn();
    } catch (const io::input_error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(msg([] { io::qz_series_from_json(json::parse(R"({"ring":"qz","val":0,"order":4,"coeffs":[{"num":["x"],"den":["1"]}]})")); })
            .find("/coeffs/0/num/0") != std::string::npos);
  CHECK(msg([] { io::qz_series_from_json(json::parse(R"({"ring":"qz","order":4,"coeffs":[]})")); }).find("/val") !=
        std::string::npos);
  CHECK(msg([] { io::qz_series_from_json(json::parse(R"({"ring":"zz","val":0,"order":4,"coeffs":[]})")); }).find("/ring") !=
        std::string::npos);
  CHECK(msg([] { io::gmatrix_from_json(json::parse(R"([[1,1],[1,1]])"), "/gamma"); }).find("/gamma") != std::string::npos);
  GradedRing R = chi_ring();
  CHECK(msg([&] { io::graded_from_json(json::parse(R"({"terms":[{"c":"1","mono":[[9,0,1]]}]})"), R.spec()); })
            .find("/terms/0/mono/0") != std::string::npos);
  CHECK(msg([&] { io::graded_from_json(json::parse(R"({"terms":[{"c":"1","mono":[[2,0,-1]]}]})"), R.spec()); })
            .find("NotAUnit") != std::string::npos);
  CHECK(msg([] { io::spec_from_json(json::parse(R"({"generators":[{"name":"a"}]})")); }).find("/generators/0/weight") !=
        std::string::npos);
}

TEST_CASE("reports") {
  SuiteReport r = run_suite("ODDPROD", SuiteParams{{{"mmax", 2}, {"smax", 2}}});
  json j = io::to_json(r);
  CHECK(j["suite"] == "ODDPROD");
  CHECK(j["pass"] == true);
  CHECK(j["counterexample"].is_null());
}

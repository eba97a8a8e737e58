#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "lift.hpp"
#include "verify.hpp"

namespace pdo::io {

using json = nlohmann::json;

// malformed input; `field` is a JSON-pointer-like path
class input_error : public std::runtime_error {
 public:
  input_error(const std::string& field, const std::string& what)
      : std::runtime_error("field '" + (field.empty() ? std::string("/") : field) + "': " + what), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

namespace detail {
inline const json& member(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw input_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw input_error(path + "/" + key, "missing");
  return *it;
}
inline long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw input_error(path, "expected an integer");
  return j.get<long>();
}
inline const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw input_error(path, "expected an array");
  return j;
}
inline std::string at(const std::string& path, size_t i) { return path + "/" + std::to_string(i); }
}  // namespace detail

// ---- Rat

inline json to_json(const Rat& r) { return to_string(r); }

inline Rat rat_from_json(const json& j, const std::string& path = "") {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw input_error(path, "expected a rational string \"p/q\"");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const error& e) {
    throw input_error(path, e.what());
  }
}

// ---- Poly, RatFunc, GMatrix

inline json to_json(const Poly& p) {
  json a = json::array();
  for (long i = 0; i <= p.degree(); ++i) a.push_back(to_json(p[i]));
  return a;
}

inline Poly poly_from_json(const json& j, const std::string& path = "") {
  detail::array(j, path);
  std::vector<Rat> c;
  for (size_t i = 0; i < j.size(); ++i) c.push_back(rat_from_json(j[i], detail::at(path, i)));
  return Poly(std::move(c));
}

inline json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline RatFunc ratfunc_from_json(const json& j, const std::string& path = "") {
  if (j.is_string() || j.is_number_integer()) return RatFunc(rat_from_json(j, path));
  Poly num = poly_from_json(detail::member(j, path, "num"), path + "/num");
  Poly den = poly_from_json(detail::member(j, path, "den"), path + "/den");
  if (den.is_zero()) throw input_error(path + "/den", "zero denominator");
  return RatFunc(num, den);
}

inline json to_json(const GMatrix& g) {
  return json::array({json::array({to_json(g.a()), to_json(g.b())}), json::array({to_json(g.c()), to_json(g.d())})});
}

inline GMatrix gmatrix_from_json(const json& j, const std::string& path = "") {
  if (!j.is_array() || j.size() != 2) throw input_error(path, "expected [[a,b],[c,d]]");
  Rat e[4];
  for (size_t r = 0; r < 2; ++r) {
    if (!j[r].is_array() || j[r].size() != 2) throw input_error(detail::at(path, r), "expected a row of two entries");
    for (size_t c = 0; c < 2; ++c) e[2 * r + c] = rat_from_json(j[r][c], detail::at(detail::at(path, r), c));
  }
  try {
    return GMatrix(e[0], e[1], e[2], e[3]);
  } catch (const error& ex) {
    throw input_error(path, ex.what());
  }
}

// ---- graded ring spec and elements

inline json to_json(const GradedRingSpec& spec) {
  json gens = json::array();
  for (size_t i = 0; i < spec.size(); ++i)
    gens.push_back({{"name", spec[i].name}, {"weight", spec[i].weight}, {"invertible", spec[i].invertible}});
  return {{"generators", gens}};
}

// {"generators":[...]} or the bare array
inline GradedRingSpec spec_from_json(const json& j, const std::string& path = "") {
  const json* gens = &j;
  std::string base = path;
  if (j.is_object()) {
    gens = &detail::member(j, path, "generators");
    base = path + "/generators";
  }
  detail::array(*gens, base);
  std::vector<Generator> out;
  for (size_t i = 0; i < gens->size(); ++i) {
    const json& g = (*gens)[i];
    std::string p = detail::at(base, i);
    const json& name = detail::member(g, p, "name");
    if (!name.is_string()) throw input_error(p + "/name", "expected a string");
    long w = detail::integer(detail::member(g, p, "weight"), p + "/weight");
    bool inv = false;
    if (auto it = g.find("invertible"); it != g.end()) {
      if (!it->is_boolean()) throw input_error(p + "/invertible", "expected a boolean");
      inv = it->get<bool>();
    }
    out.push_back({name.get<std::string>(), w, inv});
  }
  try {
    return GradedRingSpec(std::move(out));
  } catch (const error& e) {
    throw input_error(base, e.what());
  }
}

inline json to_json(const GradedElem& a) {
  json terms = json::array();
  for (const auto& [m, c] : a.terms()) {
    json mono = json::array();
    for (const auto& f : m) mono.push_back(json::array({f.gen, f.deriv, f.exp}));
    terms.push_back({{"c", to_json(c)}, {"mono", mono}});
  }
  return {{"terms", terms}};
}

inline GradedElem graded_from_json(const json& j, const GradedRingSpec& spec, const std::string& path = "") {
  if (j.is_string() || j.is_number_integer()) return GradedElem(rat_from_json(j, path));
  const json& terms = detail::array(detail::member(j, path, "terms"), path + "/terms");
  GradedElem out;
  for (size_t i = 0; i < terms.size(); ++i) {
    std::string p = detail::at(path + "/terms", i);
    Rat c = rat_from_json(detail::member(terms[i], p, "c"), p + "/c");
    const json& mono = detail::array(detail::member(terms[i], p, "mono"), p + "/mono");
    GradedElem term(c);
    for (size_t f = 0; f < mono.size(); ++f) {
      std::string fp = detail::at(p + "/mono", f);
      if (!mono[f].is_array() || mono[f].size() != 3) throw input_error(fp, "expected [genIndex, derivOrder, exponent]");
      long g = detail::integer(mono[f][0], fp + "/0"), d = detail::integer(mono[f][1], fp + "/1"),
           e = detail::integer(mono[f][2], fp + "/2");
      try {
        term = term * GradedElem::gen(spec, static_cast<int>(g), static_cast<int>(d), static_cast<int>(e));
      } catch (const error& ex) {
        throw input_error(fp, ex.what());
      }
    }
    out += term;
  }
  return out;
}

// ---- Order, series, families

inline json to_json(const Order& o) { return o.is_exact() ? json("exact") : json(o.value()); }

inline Order order_from_json(const json& j, const std::string& path = "") {
  if (j.is_string() && j.get<std::string>() == "exact") return Order::exact();
  return Order::at(detail::integer(j, path));
}

inline json ring_json(const RationalFunctions&) { return "qz"; }
inline json ring_json(const GradedRing& r) { return {{"graded", to_json(r.spec())}}; }

template <CoefficientRing Ring>
json to_json(const PDSeries<Ring>& q) {
  json coeffs = json::array();
  for (const auto& c : q.coeffs()) coeffs.push_back(to_json(c));
  return {{"ring", ring_json(q.ring())}, {"val", q.valuation()}, {"order", to_json(q.order())}, {"coeffs", coeffs}};
}

inline bool series_is_graded(const json& j, const std::string& path = "") {
  const json& r = detail::member(j, path, "ring");
  if (r.is_string() && r.get<std::string>() == "qz") return false;
  if (r.is_object() && r.contains("graded")) return true;
  throw input_error(path + "/ring", "expected \"qz\" or {\"graded\": spec}");
}

inline GradedRing graded_ring_from_json(const json& j, const std::string& path = "") {
  return GradedRing(spec_from_json(detail::member(detail::member(j, path, "ring"), path + "/ring", "graded"),
                                   path + "/ring/graded"));
}

inline QzSeries qz_series_from_json(const json& j, const std::string& path = "") {
  if (series_is_graded(j, path)) throw input_error(path + "/ring", "expected a series over qz");
  long val = detail::integer(detail::member(j, path, "val"), path + "/val");
  Order o = order_from_json(detail::member(j, path, "order"), path + "/order");
  const json& cs = detail::array(detail::member(j, path, "coeffs"), path + "/coeffs");
  std::vector<RatFunc> c;
  for (size_t i = 0; i < cs.size(); ++i) c.push_back(ratfunc_from_json(cs[i], detail::at(path + "/coeffs", i)));
  return QzSeries(RationalFunctions{}, val, std::move(c), o);
}

// the ring comes from the series itself unless one is supplied
inline GradedSeries graded_series_from_json(const json& j, const std::optional<GradedRing>& ring = std::nullopt,
                                            const std::string& path = "") {
  GradedRing R = ring ? *ring : graded_ring_from_json(j, path);
  long val = detail::integer(detail::member(j, path, "val"), path + "/val");
  Order o = order_from_json(detail::member(j, path, "order"), path + "/order");
  const json& cs = detail::array(detail::member(j, path, "coeffs"), path + "/coeffs");
  std::vector<GradedElem> c;
  for (size_t i = 0; i < cs.size(); ++i) c.push_back(graded_from_json(cs[i], R.spec(), detail::at(path + "/coeffs", i)));
  return GradedSeries(R, val, std::move(c), o);
}

template <class C>
json to_json(const WeightedFamily<C>& F) {
  json comps = json::array();
  for (const auto& [w, f] : F.components) comps.push_back({{"weight", w}, {"value", to_json(f)}});
  return {{"start", F.start}, {"bound", to_json(F.bound)}, {"components", comps}};
}

template <class Parse>
auto family_from_json(const json& j, Parse&& parse, const std::string& path = "") {
  using C = decltype(parse(json(), std::string()));
  WeightedFamily<C> F;
  F.start = detail::integer(detail::member(j, path, "start"), path + "/start");
  F.bound = order_from_json(detail::member(j, path, "bound"), path + "/bound");
  const json& comps = detail::array(detail::member(j, path, "components"), path + "/components");
  for (size_t i = 0; i < comps.size(); ++i) {
    std::string p = detail::at(path + "/components", i);
    long w = detail::integer(detail::member(comps[i], p, "weight"), p + "/weight");
    C v = parse(detail::member(comps[i], p, "value"), p + "/value");
    if (!F.components.emplace(w, std::move(v)).second) throw input_error(p + "/weight", "duplicate weight");
  }
  return F;
}

// ---- reports

inline json to_json(const SuiteReport& r) {
  json j{{"suite", r.name}, {"pass", r.passed}, {"checked", r.checked}, {"range", r.range}};
  j["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
  j["notes"] = r.notes;
  return j;
}

}  // namespace pdo::io

// pdo: command-line front end to the library.
#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "pdo/io.hpp"
#include "pdo/pdo.hpp"

using namespace pdo;
using io::json;

namespace {

struct Options {
  long order = -1;
  std::string ring = "qz";
  std::string spec;
  std::string out = "json";
  std::string input;
  std::string inline_json;
  long k = 0, l = 0, n = 0, nmax = -1;
  bool k_set = false, l_set = false;
  std::string suite;
  std::string chi = "chi";
  std::map<std::string, long> suite_params;
};

class usage_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw io::input_error(what, std::string("malformed JSON: ") + e.what());
  }
}

json read_input(const Options& o) {
  if (!o.inline_json.empty()) return parse_text(o.inline_json, "--json");
  if (o.input.empty()) throw usage_error("this subcommand needs --input FILE (or -) or --json TEXT");
  if (o.input == "-") return parse_text(slurp(std::cin), "stdin");
  std::ifstream f(o.input);
  if (!f) throw usage_error("cannot open " + o.input);
  return parse_text(slurp(f), o.input);
}

std::optional<GradedRing> spec_ring(const Options& o) {
  if (o.spec.empty()) return std::nullopt;
  std::string text = o.spec;
  if (text[0] == '@') {
    std::ifstream f(text.substr(1));
    if (!f) throw usage_error("cannot open " + text.substr(1));
    text = slurp(f);
  }
  return GradedRing(io::spec_from_json(parse_text(text, "--spec"), "--spec"));
}

GradedRing default_chi_ring(const Options& o) {
  if (auto r = spec_ring(o)) return *r;
  return GradedRing(GradedRingSpec({{"chi", 2, true}}));
}

Order order_of(const Options& o) { return o.order < 0 ? Order::exact() : Order::at(o.order); }

Order required_order(const Options& o) {
  if (o.order < 0) throw usage_error("this subcommand needs --order N");
  return Order::at(o.order);
}

bool graded(const Options& o) {
  if (o.ring == "qz") return false;
  if (o.ring == "graded") return true;
  throw usage_error("--ring must be qz or graded");
}

// graded ring: --spec wins, else the "spec" member of the input
GradedRing graded_ring(const Options& o, const json& in) {
  if (auto r = spec_ring(o)) return *r;
  if (in.is_object() && in.contains("spec")) return GradedRing(io::spec_from_json(in["spec"], "/spec"));
  throw usage_error("graded ring needs --spec or a \"spec\" member in the input");
}

long int_field(const json& in, const char* key, std::optional<long> fallback = std::nullopt) {
  if (in.is_object() && in.contains(key)) {
    if (!in[key].is_number_integer()) throw io::input_error(std::string("/") + key, "expected an integer");
    return in[key].get<long>();
  }
  if (fallback) return *fallback;
  throw io::input_error(std::string("/") + key, "missing");
}

const json& field(const json& in, const char* key) {
  if (!in.is_object() || !in.contains(key)) throw io::input_error(std::string("/") + key, "missing");
  return in[key];
}

// ---- output

void emit_series_csv(const QzSeries& q) {
  std::cout << "exponent,coefficient\n";
  for (long e = q.valuation(); e < q.end(); ++e) std::cout << e << ",\"" << q.coefficient(e).str() << "\"\n";
  std::cout << "order," << q.order().str() << "\n";
}
void emit_series_csv(const GradedSeries& q) {
  std::cout << "exponent,coefficient\n";
  for (long e = q.valuation(); e < q.end(); ++e) std::cout << e << ",\"" << q.ring().str(q.coefficient(e)) << "\"\n";
  std::cout << "order," << q.order().str() << "\n";
}

template <class S>
void emit_series(const Options& o, const S& q) {
  if (o.out == "csv") emit_series_csv(q);
  else std::cout << io::to_json(q).dump() << "\n";
}

template <class C, class Str>
void emit_family(const Options& o, const WeightedFamily<C>& F, Str&& str) {
  if (o.out == "csv") {
    std::cout << "weight,value\n";
    for (const auto& [w, f] : F.components) std::cout << w << ",\"" << str(f) << "\"\n";
    return;
  }
  std::cout << io::to_json(F).dump() << "\n";
}

void emit_rows(const Options& o, const std::vector<std::pair<long, json>>& rows, const char* key, const char* val,
               const std::vector<std::string>& text) {
  if (o.out == "csv") {
    std::cout << key << "," << val << "\n";
    for (size_t i = 0; i < rows.size(); ++i) std::cout << rows[i].first << ",\"" << text[i] << "\"\n";
    return;
  }
  json a = json::array();
  for (size_t i = 0; i < rows.size(); ++i) a.push_back({{key, rows[i].first}, {val, rows[i].second}, {"text", text[i]}});
  std::cout << a.dump() << "\n";
}

// ---- subcommands

int cmd_mul(const Options& o) {
  json in = read_input(o);
  if (graded(o)) {
    auto R = spec_ring(o);
    auto p = io::graded_series_from_json(field(in, "p"), R, "/p"), q = io::graded_series_from_json(field(in, "q"), R, "/q");
    emit_series(o, mul(p, q, order_of(o)));
  } else {
    auto p = io::qz_series_from_json(field(in, "p"), "/p");
    auto q = io::qz_series_from_json(field(in, "q"), "/q");
    emit_series(o, mul(p, q, order_of(o)));
  }
  return 0;
}

int cmd_inv(const Options& o) {
  json in = read_input(o);
  if (graded(o)) emit_series(o, inverse(io::graded_series_from_json(in, spec_ring(o)), order_of(o)));
  else emit_series(o, inverse(io::qz_series_from_json(in), order_of(o)));
  return 0;
}

int cmd_sqrt(const Options& o) {
  json in = read_input(o);
  if (graded(o)) {
    auto q = io::graded_series_from_json(field(in, "q"), spec_ring(o), "/q");
    emit_series(o, sqrt(q, io::graded_from_json(field(in, "root"), q.ring().spec(), "/root"), order_of(o)));
  } else {
    auto q = io::qz_series_from_json(field(in, "q"), "/q");
    emit_series(o, sqrt(q, io::ratfunc_from_json(field(in, "root"), "/root"), order_of(o)));
  }
  return 0;
}

// {"gamma": M, "q": series} or {"gamma": M, "k": exponent}
int cmd_act(const Options& o) {
  json in = read_input(o);
  GMatrix g = io::gmatrix_from_json(field(in, "gamma"), "/gamma");
  if (in.contains("q")) emit_series(o, act_series(io::qz_series_from_json(in["q"], "/q"), g, order_of(o)));
  else emit_series(o, act_y_power(int_field(in, "k", o.k_set ? std::optional<long>(o.k) : std::nullopt), g, order_of(o)));
  return 0;
}

int cmd_slash(const Options& o) {
  json in = read_input(o);
  RatFunc f = io::ratfunc_from_json(field(in, "f"), "/f");
  long k = int_field(in, "k", o.k_set ? std::optional<long>(o.k) : std::nullopt);
  RatFunc r = slash(f, k, io::gmatrix_from_json(field(in, "gamma"), "/gamma"));
  if (o.out == "csv") std::cout << "value\n\"" << r.str() << "\"\n";
  else std::cout << io::to_json(r).dump() << "\n";
  return 0;
}

int cmd_lift(const Options& o) {
  json in = read_input(o);
  long m = int_field(in, "m", o.k_set ? std::optional<long>(o.k) : std::nullopt);
  Order N = order_of(o);
  if (graded(o)) {
    GradedRing R = graded_ring(o, in);
    emit_series(o, psi(R, m, io::graded_from_json(field(in, "f"), R.spec(), "/f"), N));
  } else {
    emit_series(o, psi(RationalFunctions{}, m, io::ratfunc_from_json(field(in, "f"), "/f"), N));
  }
  return 0;
}

int cmd_psi_inv(const Options& o) {
  json in = read_input(o);
  if (graded(o)) {
    auto q = io::graded_series_from_json(in, spec_ring(o));
    emit_family(o, psi_inverse(q, order_of(o)), [&](const GradedElem& e) { return q.ring().str(e); });
  } else {
    emit_family(o, psi_inverse(io::qz_series_from_json(in), order_of(o)), [](const RatFunc& f) { return f.str(); });
  }
  return 0;
}

int cmd_star(const Options& o) {
  json in = read_input(o);
  Order N = required_order(o);
  if (graded(o)) {
    GradedRing R = graded_ring(o, in);
    GradedElem f = io::graded_from_json(field(in, "f"), R.spec(), "/f"), g = io::graded_from_json(field(in, "g"), R.spec(), "/g");
    long k = int_field(in, "k", homogeneous_weight(R, f)), l = int_field(in, "l", homogeneous_weight(R, g));
    emit_family(o, star(R, f, k, g, l, N), [&](const GradedElem& e) { return R.str(e); });
  } else {
    RatFunc f = io::ratfunc_from_json(field(in, "f"), "/f"), g = io::ratfunc_from_json(field(in, "g"), "/g");
    emit_family(o, star(RationalFunctions{}, f, int_field(in, "k"), g, int_field(in, "l"), N),
                [](const RatFunc& x) { return x.str(); });
  }
  return 0;
}

int cmd_alpha_table(const Options& o) {
  if (!o.k_set || !o.l_set || o.nmax < 0) throw usage_error("alpha-table needs --k, --l and --nmax");
  auto a = alpha_table(o.k, o.l, o.nmax);
  std::vector<std::pair<long, json>> rows;
  std::vector<std::string> text;
  for (size_t n = 0; n < a.size(); ++n) {
    rows.emplace_back(static_cast<long>(n), io::to_json(a[n]));
    text.push_back(to_string(a[n]));
  }
  emit_rows(o, rows, "n", "alpha", text);
  return 0;
}

// [f,g]_n from input {"f","g","k","l","n"}, or the bracket of free generators of weights --k, --l
int cmd_rc(const Options& o) {
  if (o.input.empty() && o.inline_json.empty()) {
    if (!o.k_set || !o.l_set) throw usage_error("rc needs --k and --l, or an input");
    GradedRing R(GradedRingSpec({{"F", o.k, false}, {"G", o.l, false}}));
    long top = o.nmax < 0 ? o.n : o.nmax;
    std::vector<std::pair<long, json>> rows;
    std::vector<std::string> text;
    for (long n = (o.nmax < 0 ? o.n : 0); n <= top; ++n) {
      GradedElem b = rc_bracket(R, R.gen(0), R.gen(1), o.k, o.l, n);
      rows.emplace_back(n, io::to_json(b));
      text.push_back(R.str(b));
    }
    emit_rows(o, rows, "n", "bracket", text);
    return 0;
  }
  json in = read_input(o);
  long n = int_field(in, "n", o.n);
  if (graded(o)) {
    GradedRing R = graded_ring(o, in);
    GradedElem f = io::graded_from_json(field(in, "f"), R.spec(), "/f"), g = io::graded_from_json(field(in, "g"), R.spec(), "/g");
    long k = int_field(in, "k", homogeneous_weight(R, f)), l = int_field(in, "l", homogeneous_weight(R, g));
    GradedElem b = rc_bracket(R, f, g, k, l, n);
    if (o.out == "csv") std::cout << "value\n\"" << R.str(b) << "\"\n";
    else std::cout << io::to_json(b).dump() << "\n";
  } else {
    RationalFunctions R;
    RatFunc f = io::ratfunc_from_json(field(in, "f"), "/f"), g = io::ratfunc_from_json(field(in, "g"), "/g");
    RatFunc b = rc_bracket(R, f, g, int_field(in, "k"), int_field(in, "l"), n);
    if (o.out == "csv") std::cout << "value\n\"" << b.str() << "\"\n";
    else std::cout << io::to_json(b).dump() << "\n";
  }
  return 0;
}

int cmd_g_table(const Options& o) {
  if (!o.k_set || o.nmax < 0) throw usage_error("g-table needs --k and --nmax");
  GradedRing R = default_chi_ring(o);
  auto chi = R.spec().index_of(o.chi);
  if (!chi) throw usage_error("no generator named '" + o.chi + "' in the spec");
  auto g = g_forms(R, *chi, o.k, o.nmax);
  std::vector<std::pair<long, json>> rows;
  std::vector<std::string> text;
  for (const auto& [w, e] : g) {
    rows.emplace_back(w, io::to_json(e));
    text.push_back(R.str(e));
  }
  emit_rows(o, rows, "weight", "g", text);
  return 0;
}

int cmd_rewrite_u(const Options& o) {
  json in = read_input(o);
  std::optional<GradedRing> R = spec_ring(o);
  auto q = io::graded_series_from_json(in, R);
  auto chi = q.ring().spec().index_of(o.chi);
  if (!chi) throw usage_error("no generator named '" + o.chi + "' in the ring");
  auto a = rewrite_in_u(q.ring(), *chi, q, order_of(o));
  std::vector<std::pair<long, json>> rows;
  std::vector<std::string> text;
  for (size_t k = 0; k < a.size(); ++k) {
    rows.emplace_back(static_cast<long>(k), io::to_json(a[k]));
    text.push_back(q.ring().str(a[k]));
  }
  emit_rows(o, rows, "k", "a", text);
  return 0;
}

int cmd_verify(const Options& o) {
  SuiteParams p{o.suite_params};
  std::vector<std::string> names;
  if (o.suite == "all") names = suite_names();
  else names.push_back(o.suite);
  std::vector<std::future<SuiteReport>> jobs;
  for (const auto& n : names) jobs.push_back(std::async(std::launch::async, [n, p] { return run_suite(n, p); }));
  bool ok = true;
  if (o.out == "csv") std::cout << "suite,pass,checked,range,counterexample\n";
  for (auto& j : jobs) {
    SuiteReport r = j.get();
    ok = ok && r.passed;
    if (o.out == "csv")
      std::cout << r.name << "," << (r.passed ? "pass" : "fail") << "," << r.checked << ",\"" << r.range << "\",\""
                << r.counterexample.value_or("") << "\"\n";
    else
      std::cout << io::to_json(r).dump() << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact pseudodifferential operator calculus"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("--order", o.order, "working order N (terms below y^N)")->check(CLI::NonNegativeNumber);
    s->add_option("--ring", o.ring, "coefficient ring")->check(CLI::IsMember({"qz", "graded"}));
    s->add_option("--spec", o.spec, "generators JSON, or @file");
    s->add_option("--out", o.out, "output format")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--input", o.input, "input JSON file, - for stdin");
    s->add_option("--json", o.inline_json, "input JSON text");
  };
  auto weights = [&](CLI::App* s) {
    s->add_option_function<long>("--k", [&](long v) { o.k = v; o.k_set = true; }, "first weight / exponent");
    s->add_option_function<long>("--l", [&](long v) { o.l = v; o.l_set = true; }, "second weight");
    s->add_option("--nmax", o.nmax, "largest index")->check(CLI::NonNegativeNumber);
  };
  std::map<std::string, std::function<int(const Options&)>> handlers{
      {"mul", cmd_mul},     {"inv", cmd_inv},         {"sqrt", cmd_sqrt},   {"act", cmd_act},
      {"slash", cmd_slash}, {"lift", cmd_lift},       {"psi-inv", cmd_psi_inv}, {"star", cmd_star},
      {"alpha-table", cmd_alpha_table}, {"rc", cmd_rc}, {"g-table", cmd_g_table}, {"rewrite-u", cmd_rewrite_u},
  };
  const std::map<std::string, std::string> help{
      {"mul", "product p*q of {\"p\":series,\"q\":series}"},
      {"inv", "inverse of a series"},
      {"sqrt", "square root of {\"q\":series,\"root\":coefficient}"},
      {"act", "series . gamma, from {\"gamma\":M,\"q\":series} or {\"gamma\":M,\"k\":exponent}"},
      {"slash", "f|_k gamma from {\"f\",\"k\",\"gamma\"}"},
      {"lift", "psi_m(f) from {\"f\",\"m\"}"},
      {"psi-inv", "weighted family of a series"},
      {"star", "star product of {\"f\",\"g\"[,\"k\",\"l\"]}"},
      {"alpha-table", "alpha_n(k,l) for n <= nmax"},
      {"rc", "Rankin-Cohen bracket"},
      {"g-table", "g_{k,2n} for k <= n <= nmax"},
      {"rewrite-u", "coefficients a_k of an invariant series in powers of u = x chi"},
  };
  for (const auto& [name, h] : help) {
    auto* s = app.add_subcommand(name, h);
    common(s);
    if (name == "alpha-table" || name == "rc" || name == "g-table" || name == "act" || name == "slash" || name == "lift")
      weights(s);
    if (name == "rc") s->add_option("--n", o.n, "bracket index");
    if (name == "g-table" || name == "rewrite-u") s->add_option("--chi", o.chi, "name of the weight-2 unit");
  }
  auto* ver = app.add_subcommand("verify", "run an identity suite (or all)");
  common(ver);
  ver->add_option("suite", o.suite, "suite name or 'all'")->required();
  // --order and --nmax come from the common flags
  for (const char* key : {"umax", "kmax", "mmax", "smax", "hmax", "jmax", "imax", "pmax", "count", "seed", "depth", "len"})
    ver->add_option_function<long>(std::string("--") + key, [&o, key](long v) { o.suite_params[key] = v; }, "suite parameter");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    if (ver->parsed()) {
      if (o.order >= 0) o.suite_params["order"] = o.order;
      if (o.nmax >= 0) o.suite_params["nmax"] = o.nmax;
      if (o.suite != "all" && !suite_registry().count(o.suite)) throw usage_error("unknown suite '" + o.suite + "'");
      return cmd_verify(o);
    }
    for (const auto& [name, fn] : handlers)
      if (app.got_subcommand(name)) return fn(o);
  } catch (const usage_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const io::input_error& e) {
    std::cerr << "input: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}

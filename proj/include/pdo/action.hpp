#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "series.hpp"

namespace pdo {

inline RatFunc slash(const RatFunc& f, long k, const GMatrix& g) {
  return g.s().pow(-k) * mobius_compose(f, g);
}

// y^k . gamma = sum_u omega_k(u) (cz+d)^{-k} (c/(cz+d))^u y^{2u+k}
inline QzSeries act_y_power(long k, const GMatrix& g, Order order) {
  RationalFunctions ring;
  bool terminates = g.c() == 0 || (k <= 0 && k % 2 == 0);
  if (!terminates && order.is_exact())
    throw error(errc::precision_required, "y^" + std::to_string(k) + " . gamma is an infinite series");
  RatFunc s = g.s();
  RatFunc sinv = s.inverse();
  RatFunc ratio = sinv * g.c();
  std::vector<RatFunc> coeffs;
  RatFunc cur = s.pow(-k);
  for (long u = 0;; ++u) {
    long e = k + 2 * u;
    if (!order.covers(e)) break;
    Rat w = omega(k, u);
    if (w == 0 || cur.is_zero()) break;
    if (u) coeffs.push_back(RatFunc());
    coeffs.push_back(cur * w);
    cur = cur * ratio;
  }
  return QzSeries(ring, k, std::move(coeffs), terminates ? Order::exact() : order);
}

// q . gamma = sum_n (f_n o gamma) (y^n . gamma)
inline QzSeries act_series(const QzSeries& q, const GMatrix& g, Order cap = Order::exact()) {
  Order target = min(q.order(), cap);
  QzSeries out(q.ring(), target);
  for (long n = q.valuation(); n < q.end(); ++n) {
    const RatFunc& f = q.coefficient(n);
    if (f.is_zero()) continue;
    out += act_y_power(n, g, target).scale_left(mobius_compose(f, g));
  }
  return out;
}

// x^{-1} . gamma = p x^{-1} + p r
struct CocyclePair {
  std::string name;
  std::function<RatFunc(const GMatrix&)> p;
  std::function<RatFunc(const GMatrix&)> r;

  static CocyclePair modular() {
    return {"modular", [](const GMatrix& g) { return g.s().pow(2); }, [](const GMatrix&) { return RatFunc(); }};
  }
  // r' = -p^{-1} d(p) with d = -d/dz
  static CocyclePair modular_log_derivative() {
    return {"log-derivative", [](const GMatrix& g) { return g.s().pow(2); },
            [](const GMatrix& g) {
              RatFunc p = g.s().pow(2);
              return p.inverse() * p.derivative();
            }};
  }
  static CocyclePair kappa(const Rat& kap) {
    return {"kappa=" + kap.get_str(), [](const GMatrix& g) { return g.s().pow(2); },
            [kap](const GMatrix& g) { return g.s().inverse() * (2 * g.c() * kap); }};
  }
  // p = 1, r = c: not a cocycle
  static CocyclePair broken() {
    return {"broken", [](const GMatrix&) { return RatFunc(1); }, [](const GMatrix& g) { return RatFunc(g.c()); }};
  }
};

inline QzSeries act_x_inverse_generic(const GMatrix& g, const CocyclePair& cp) {
  RatFunc p = cp.p(g);
  if (p.is_zero()) throw error(errc::not_a_unit, "p_gamma is zero");
  return QzSeries(RationalFunctions{}, -2, {p, RatFunc(), p * cp.r(g)}, Order::exact());
}

// even-support q acted on through x^{-1} . gamma = p x^{-1} + p r
inline QzSeries act_series_generic(const QzSeries& q, const GMatrix& g, const CocyclePair& cp,
                                   Order cap = Order::exact()) {
  if (!q.is_even()) throw error(errc::parity_mismatch, "the cocycle action is defined on even-support series");
  Order target = min(q.order(), cap);
  QzSeries w = act_x_inverse_generic(g, cp);
  QzSeries out(q.ring(), target);
  std::optional<QzSeries> winv;
  for (long e = q.valuation(); e < q.end(); e += 2) {
    const RatFunc& f = q.coefficient(e);
    if (f.is_zero()) continue;
    long n = e / 2;  // x^n = (x^{-1})^{-n}
    QzSeries pw = QzSeries::one(q.ring());
    if (n <= 0) {
      for (long i = 0; i < -n; ++i) pw = mul(pw, w, target);
    } else {
      if (!winv) {
        if (target.is_exact()) throw error(errc::precision_required, "positive x-powers need a working order");
        winv = inverse(w, target + 2);
      }
      for (long i = 0; i < n; ++i) pw = mul(pw, *winv, target);
    }
    out += pw.scale_left(mobius_compose(f, g));
  }
  return out;
}

struct CocycleReport {
  bool ok = true;
  long checked = 0;
  std::string violation;
};

// p_{gg'} = (p_g o g') p_{g'} and r_{gg'} = r_{g'} + p_{g'}^{-1} (r_g o g') on all words of length <= depth
inline CocycleReport check_cocycles(const CocyclePair& cp, const std::vector<GMatrix>& gens, int depth) {
  if (depth < 1) throw error(errc::invalid_argument, "depth must be >= 1");
  std::vector<GMatrix> words{GMatrix::identity()};
  std::vector<GMatrix> layer{GMatrix::identity()};
  for (int d = 0; d < depth; ++d) {
    std::vector<GMatrix> next;
    for (const auto& w : layer)
      for (const auto& s : gens) next.push_back(w * s);
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  CocycleReport rep;
  for (const auto& g : words) {
    for (const auto& h : words) {
      ++rep.checked;
      GMatrix gh = g * h;
      RatFunc ph = cp.p(h);
      if (!(cp.p(gh) == mobius_compose(cp.p(g), h) * ph)) {
        rep.ok = false;
        rep.violation = "p-law fails at g=" + g.str() + ", g'=" + h.str();
        return rep;
      }
      if (!(cp.r(gh) == cp.r(h) + ph.inverse() * mobius_compose(cp.r(g), h))) {
        rep.ok = false;
        rep.violation = "r-law fails at g=" + g.str() + ", g'=" + h.str();
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace pdo

#pragma once

#include <map>
#include <vector>

#include "rankin.hpp"

namespace pdo {

namespace detail {
inline void require_generator(const GradedRing& ring, int gen, long weight) {
  if (gen < 0 || static_cast<size_t>(gen) >= ring.spec().size())
    throw error(errc::not_a_unit, "missing generator");
  const auto& g = ring.spec()[gen];
  if (!g.invertible) throw error(errc::not_a_unit, g.name + " is not invertible");
  if (g.weight != weight)
    throw error(errc::invalid_argument, g.name + " must have weight " + std::to_string(weight));
}
}  // namespace detail

// (x chi)^k = sum_n (-1)^n (k+n)!/k! sum_{s_1+..+s_k=n} prod chi^{(s_i)}/(s_i+1)! x^{k+n}
inline GradedSeries u_power(const GradedRing& ring, int chi, long k, Order order) {
  detail::require_generator(ring, chi, 2);
  if (k < 0) throw error(errc::invalid_argument, "u_power needs k >= 0");
  if (k == 0) return GradedSeries::one(ring, order);
  if (order.is_exact()) throw error(errc::precision_required, "u^k is an infinite series");
  std::vector<GradedElem> coeffs;
  for (long n = 0; 2 * (k + n) < order.value(); ++n) {
    GradedElem c;
    for (const auto& s : compositions(n, k)) {
      GradedElem term(Rat(1));
      Int den = 1;
      for (long si : s) {
        term = term * ring.gen(chi, static_cast<int>(si));
        den *= factorial(si + 1);
      }
      c += term * ratio(1, den);
    }
    Rat pre = ratio(factorial(k + n), factorial(k));
    if (n % 2) pre = -pre;
    if (n) coeffs.push_back(GradedElem());
    coeffs.push_back(c * pre);
  }
  return GradedSeries(ring, 2 * k, std::move(coeffs), order);
}

// g_{k,2n} for k <= n <= nmax, keyed by weight 2n
inline std::map<long, GradedElem> g_forms(const GradedRing& ring, int chi, long k, long nmax) {
  auto fam = psi_inverse(u_power(ring, chi, k, Order::at(2 * nmax + 1)));
  std::map<long, GradedElem> out;
  for (long n = k; n <= nmax; ++n) out[2 * n] = fam.at(2 * n);
  for (const auto& [m, f] : fam.components)
    if (m % 2 != 0 || m < 2 * k)
      throw error(errc::consistency_failure, "u^k peeled to an unexpected weight " + std::to_string(m));
  return out;
}

// g_{k,2k+2i} from the gamma_i closed form (A2, with A1 cross-check for k >= 2)
inline GradedElem g_closed(const GradedRing& ring, int chi, long k, long i) {
  detail::require_generator(ring, chi, 2);
  if (k < 1 || i < 0) throw error(errc::invalid_argument, "g_closed needs k >= 1, i >= 0");
  GradedElem sum;
  for (const auto& t : compositions(i, k)) {
    Rat g = gamma_tuple(k, i, t, gamma_method::A2);
    if (k >= 2 && g != gamma_tuple(k, i, t, gamma_method::A1))
      throw error(errc::consistency_failure, "alpha1 and alpha2 disagree");
    if (g == 0) continue;
    GradedElem term(Rat(1));
    Int den = 1;
    for (long tj : t) {
      term = term * ring.gen(chi, static_cast<int>(tj));
      den *= factorial(tj + 1);
    }
    sum += term * (g / den);
  }
  Rat pre = ratio(factorial(k + i) * factorial(k + i - 1), factorial(2 * k + 2 * i - 2) * factorial(k));
  if (i % 2) pre = -pre;
  return sum * pre;
}

// f_{2m} = sum_{k<=m} sum_{max(k,1)<=n<=m} alpha_{m-n}(0,2n) [a_k, g_{k,2n}]_{m-n}, f_0 = a_0
inline WeightedFamily<GradedElem> decompose_even(const GradedRing& ring, int chi, const std::vector<GradedElem>& a,
                                                 Order order) {
  detail::require_generator(ring, chi, 2);
  if (order.is_exact()) throw error(errc::precision_required, "decompose_even needs a working order");
  for (const auto& ak : a) ring.check_weight(ak, 0);
  long M = (order.value() - 1) / 2;
  std::vector<std::map<long, GradedElem>> g(a.size());
  for (long k = 1; k < static_cast<long>(a.size()) && k <= M; ++k)
    if (!a[k].is_zero()) g[k] = g_forms(ring, chi, k, M);
  WeightedFamily<GradedElem> out;
  out.bound = order;
  if (M >= 0 && !a.empty() && !a[0].is_zero()) out.components[0] = a[0];
  for (long m = 1; m <= M; ++m) {
    GradedElem f;
    for (long k = 1; k <= m && k < static_cast<long>(a.size()); ++k) {
      if (a[k].is_zero()) continue;
      for (long n = k; n <= m; ++n) {
        const GradedElem& gk = g[k][2 * n];
        if (gk.is_zero()) continue;
        f += rc_bracket(ring, a[k], gk, 0, 2 * n, m - n) * alpha_zero_column(m - n, n);
      }
    }
    if (!f.is_zero()) out.components[2 * m] = f;
  }
  return out;
}

// the psi_inverse oracle for decompose_even
inline WeightedFamily<GradedElem> decompose_even_oracle(const GradedRing& ring, int chi,
                                                        const std::vector<GradedElem>& a, Order order) {
  GradedSeries q(ring, order);
  for (long k = 0; k < static_cast<long>(a.size()); ++k)
    if (order.covers(2 * k)) q += u_power(ring, chi, k, order).scale_left(a[k]);
  return psi_inverse(q, order);
}

// q = sum_k a_k u^k with weight-0 a_k; trailing zeros dropped
inline std::vector<GradedElem> rewrite_in_u(const GradedRing& ring, int chi, const GradedSeries& q,
                                            Order cap = Order::exact()) {
  detail::require_generator(ring, chi, 2);
  Order target = min(q.order(), cap);
  GradedSeries r = q.truncated(target);
  if (!r.is_zero() && r.valuation() < 0) throw error(errc::not_invariant, "negative valuation");
  for (long e = r.valuation(); e < r.end(); ++e) {
    const GradedElem& c = r.coefficient(e);
    if (c.is_zero()) continue;
    if (e % 2) throw error(errc::not_invariant, "odd exponent " + std::to_string(e));
    auto w = ring.weight_of(c);
    if (!w || *w != e)
      throw error(errc::not_invariant, "coefficient of y^" + std::to_string(e) + " is not of weight " + std::to_string(e));
  }
  GradedSeries uinv = GradedSeries::monomial(ring, ring.gen(chi, 0, -1), -2);
  std::vector<GradedElem> out;
  while (r.order().covers(0)) {
    GradedElem a0 = r.coefficient(0);
    out.push_back(a0);
    r = r - GradedSeries::monomial(ring, a0, 0);
    if (r.is_zero() && r.is_exact()) break;
    r = mul(r, uinv);
  }
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  if (out.empty()) out.push_back(GradedElem());
  return out;
}

// v with v^2 = y^2 xi^2, leading xi y
inline GradedSeries v_uniformizer(const GradedRing& ring, int xi, long order) {
  detail::require_generator(ring, xi, 1);
  GradedElem x = ring.gen(xi);
  GradedSeries q = mul(GradedSeries::monomial(ring, ring.one(), 2), GradedSeries::monomial(ring, x * x, 0),
                       Order::at(order + 1));
  return sqrt(q, x);
}

// psi_{2k}(xi^{2k})^{-1} psi_k(f xi^{2k}) for f of weight -k
inline GradedSeries psi_neg_via_xi(const GradedRing& ring, int xi, long k, const GradedElem& f, long order) {
  detail::require_generator(ring, xi, 1);
  if (k < 1) throw error(errc::invalid_argument, "k must be positive");
  ring.check_weight(f, -k);
  GradedElem X = ring.gen(xi, 0, static_cast<int>(2 * k));
  auto A = psi(ring, 2 * k, X, Order::at(order + 3 * k));
  auto B = psi(ring, k, f * X, Order::at(order + 2 * k));
  return mul(inverse(A), B, Order::at(order));
}

}  // namespace pdo

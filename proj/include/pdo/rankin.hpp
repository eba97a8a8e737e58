#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "lift.hpp"

namespace pdo {

// [f,g]_n = sum_j (-1)^j C(k+n-1, n-j) C(l+n-1, j) f^{(j)} g^{(n-j)}
template <CoefficientRing Ring>
typename Ring::value_type rc_bracket(const Ring& ring, const typename Ring::value_type& f,
                                     const typename Ring::value_type& g, long k, long l, long n) {
  using C = typename Ring::value_type;
  std::vector<C> df{f}, dg{g};
  for (long i = 1; i <= n; ++i) {
    df.push_back(ring.derivative(df.back()));
    dg.push_back(ring.derivative(dg.back()));
  }
  C out = ring.zero();
  for (long j = 0; j <= n; ++j) {
    Rat c = binomial(k + n - 1, n - j) * binomial(l + n - 1, j);
    if (c == 0) continue;
    if (j % 2) c = -c;
    out = out + (df[j] * dg[n - j]) * c;
  }
  return out;
}

template <CoefficientRing Ring>
WeightedFamily<typename Ring::value_type> star_families(const Ring& ring,
                                                        const WeightedFamily<typename Ring::value_type>& F,
                                                        const WeightedFamily<typename Ring::value_type>& G,
                                                        Order order) {
  return psi_inverse(mul(psi_assemble(ring, F, order), psi_assemble(ring, G, order), order), order);
}

// Psi^{-1}(psi_k(f) psi_l(g)), weights given explicitly
template <CoefficientRing Ring>
WeightedFamily<typename Ring::value_type> star(const Ring& ring, const typename Ring::value_type& f, long k,
                                               const typename Ring::value_type& g, long l, Order order) {
  if (k < 0 || l < 0) throw error(errc::invalid_argument, "star needs nonnegative weights");
  auto p = mul(psi(ring, k, f, order), psi(ring, l, g, order), order);
  return psi_inverse(p, order);
}

inline long homogeneous_weight(const GradedRing& ring, const GradedElem& f) {
  auto w = ring.weight_of(f);
  if (!w) throw error(errc::not_homogeneous, ring.str(f) + " is not homogeneous");
  return *w;
}

inline WeightedFamily<GradedElem> star(const GradedRing& ring, const GradedElem& f, const GradedElem& g, Order order) {
  return star(ring, f, homogeneous_weight(ring, f), g, homogeneous_weight(ring, g), order);
}

// alpha_r(0, 2n), closed form with m = r + n
inline Rat alpha_zero_column(long r, long n) {
  if (n < 1) throw error(errc::edge_case_weight_zero, "alpha_r(0,0) is not defined by the closed form");
  long m = r + n;
  Rat c = ratio(factorial(m - 1) * factorial(2 * n - 1) * factorial(r), factorial(2 * m - 2) * factorial(n - 1) * (m + n - 1));
  c *= binomial(m, r);
  return r % 2 ? Rat(-c) : c;
}

// Extract alpha_n(k,l) from the star product of free generators F (weight k), G (weight l).
// Any k, l >= 0 for which the bracket is nonzero; a failed proportionality throws.
inline std::vector<Rat> alpha_extract(long k, long l, long nmax) {
  if (k < 0 || l < 0 || nmax < 0) throw error(errc::invalid_argument, "alpha_extract needs k, l, nmax >= 0");
  GradedRing ring(GradedRingSpec({{"F", k, false}, {"G", l, false}}));
  GradedElem F = ring.gen(0), G = ring.gen(1);
  Order order = Order::at(k + l + 2 * nmax + 1);
  auto fam = star(ring, F, k, G, l, order);
  std::vector<Rat> alpha;
  for (long n = 0; n <= nmax; ++n) {
    GradedElem comp = fam.at(k + l + 2 * n);
    GradedElem br = rc_bracket(ring, F, G, k, l, n);
    if (br.is_zero()) throw error(errc::edge_case_weight_zero, "bracket vanishes identically at n=" + std::to_string(n));
    const auto& [mono, bc] = *br.terms().begin();
    Rat a = comp.coefficient(mono) / bc;
    if (!(comp == br * a))
      throw error(errc::proportionality_failure,
                  "star component at weight " + std::to_string(k + l + 2 * n) + " is not a multiple of the bracket");
    if (n < nmax && !fam.at(k + l + 2 * n + 1).is_zero())
      throw error(errc::proportionality_failure, "odd offset component does not vanish");
    alpha.push_back(a);
  }
  return alpha;
}

namespace detail {
struct alpha_memo {
  std::mutex mu;
  std::map<std::pair<long, long>, std::vector<Rat>> table;
};
inline alpha_memo& alpha_cache() {
  static alpha_memo m;
  return m;
}
}  // namespace detail

// alpha_0..alpha_nmax of (k,l); k,l >= 1 by extraction, (0, even l) by the closed form
inline std::vector<Rat> alpha_table(long k, long l, long nmax) {
  if (nmax < 0) throw error(errc::invalid_argument, "nmax must be >= 0");
  if (k == 0 && l >= 2 && l % 2 == 0) {
    std::vector<Rat> out;
    for (long r = 0; r <= nmax; ++r) out.push_back(alpha_zero_column(r, l / 2));
    return out;
  }
  if (k < 1 || l < 1)
    throw error(errc::edge_case_weight_zero, "alpha(" + std::to_string(k) + "," + std::to_string(l) + ") needs k, l >= 1");
  auto& memo = detail::alpha_cache();
  {
    std::lock_guard lock(memo.mu);
    auto it = memo.table.find({k, l});
    if (it != memo.table.end() && static_cast<long>(it->second.size()) > nmax)
      return {it->second.begin(), it->second.begin() + nmax + 1};
  }
  auto a = alpha_extract(k, l, nmax);
  std::lock_guard lock(memo.mu);
  auto& slot = memo.table[{k, l}];
  if (slot.size() < a.size()) slot = a;
  return a;
}

// sum_n alpha_n(k,l) [f,g]_n, n <= nmax
inline WeightedFamily<GradedElem> star_via_brackets(const GradedRing& ring, const GradedElem& f, const GradedElem& g,
                                                    long nmax) {
  long k = homogeneous_weight(ring, f), l = homogeneous_weight(ring, g);
  auto alpha = alpha_table(k, l, nmax);
  WeightedFamily<GradedElem> out;
  out.start = k + l;
  out.bound = Order::at(k + l + 2 * nmax + 1);
  for (long n = 0; n <= nmax; ++n) {
    GradedElem c = rc_bracket(ring, f, g, k, l, n) * alpha[n];
    if (!c.is_zero()) out.components[k + l + 2 * n] = c;
  }
  return out;
}

}  // namespace pdo

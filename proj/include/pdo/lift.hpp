#pragma once

#include <map>
#include <string>
#include <vector>

#include "action.hpp"
#include "linalg.hpp"

namespace pdo {

// f~ = sum_m f_m, generated up to (not including) weight `bound`
template <class C>
struct WeightedFamily {
  long start = 0;
  std::map<long, C> components;
  Order bound;

  C at(long m) const {
    auto it = components.find(m);
    return it == components.end() ? C() : it->second;
  }
  friend bool operator==(const WeightedFamily&, const WeightedFamily&) = default;
};

inline bool negative_odd(long m) { return m < 0 && (-m) % 2 == 1; }

// sum_n alpha_m(n) f^{(n)} y^{m+2n}, no weight check
template <CoefficientRing Ring>
PDSeries<Ring> psi_unchecked(const Ring& ring, long m, const typename Ring::value_type& f, Order order) {
  using C = typename Ring::value_type;
  if (negative_odd(m)) throw error(errc::negative_odd_weight, "no lift at weight " + std::to_string(m));
  if (ring.is_zero(f)) return PDSeries<Ring>(ring, order.is_exact() ? Order::exact() : order);
  std::optional<long> nterms;  // alpha_m(n) = 0 from here on
  if (m == 0) nterms = 1;
  else if (m < 0) nterms = -m / 2;
  if (auto nil = ring.derivative_nilpotency(f)) nterms = nterms ? std::min(*nterms, *nil) : *nil;
  if (!nterms && order.is_exact())
    throw error(errc::precision_required, "psi_" + std::to_string(m) + " of this element is an infinite series");
  std::vector<C> coeffs;
  C d = f;
  for (long n = 0; !nterms || n < *nterms; ++n) {
    if (!order.covers(m + 2 * n)) break;
    if (n) {
      d = ring.derivative(d);
      coeffs.push_back(ring.zero());
    }
    coeffs.push_back(d * lift_coeff(m, n));
  }
  Order out = nterms ? Order::exact() : order;
  return PDSeries<Ring>(ring, m, std::move(coeffs), out);
}

template <CoefficientRing Ring>
PDSeries<Ring> psi(const Ring& ring, long m, const typename Ring::value_type& f, Order order) {
  if (negative_odd(m)) throw error(errc::negative_odd_weight, "no lift at weight " + std::to_string(m));
  ring.check_weight(f, m);
  return psi_unchecked(ring, m, f, order);
}

template <CoefficientRing Ring>
typename Ring::value_type pi_k(const PDSeries<Ring>& q, long k) {
  if (!q.is_zero() && q.valuation() < k)
    throw error(errc::valuation_too_low,
                "valuation " + std::to_string(q.valuation()) + " < " + std::to_string(k));
  return q.coefficient(k);
}

// weight-blind peeling
template <CoefficientRing Ring>
WeightedFamily<typename Ring::value_type> psi_inverse(const PDSeries<Ring>& q, Order cap = Order::exact()) {
  Order target = min(q.order(), cap);
  WeightedFamily<typename Ring::value_type> out;
  out.bound = target;
  PDSeries<Ring> r = q.truncated(target);
  out.start = r.is_zero() ? 0 : r.valuation();
  while (!r.is_zero()) {
    long m = r.valuation();
    if (negative_odd(m)) throw error(errc::negative_odd_weight, "series of valuation " + std::to_string(m));
    auto f = r.leading();
    r = r - psi_unchecked(r.ring(), m, f, target);
    out.components.emplace(m, std::move(f));
  }
  return out;
}

template <CoefficientRing Ring>
PDSeries<Ring> psi_assemble(const Ring& ring, const WeightedFamily<typename Ring::value_type>& F, Order order) {
  PDSeries<Ring> out(ring, order);
  for (const auto& [m, f] : F.components) {
    if (!order.covers(m)) break;
    out += psi(ring, m, f, order);
  }
  return out;
}

// Closed coefficient pairs between a family and the coefficients of its lift.
enum class pair_direction { even_fwd, even_bwd, odd_fwd, odd_bwd };

namespace detail {

template <CoefficientRing Ring>
typename Ring::value_type nth_derivative(const Ring& ring, typename Ring::value_type f, long r) {
  for (long i = 0; i < r && !ring.is_zero(f); ++i) f = ring.derivative(f);
  return f;
}

template <class C>
void require_parity(const std::map<long, C>& in, int parity, bool keyed_by_weight) {
  for (const auto& [k, v] : in) {
    bool bad = keyed_by_weight ? (((k % 2) + 2) % 2 != parity) : false;
    if (bad || k < 0) throw error(errc::parity_mismatch, "index " + std::to_string(k) + " does not fit the pair");
  }
}

}  // namespace detail

// even_fwd: {2n: f_2n} -> {m: h_m} (h_m the x^m coefficient), m <= top
// even_bwd: {m: h_m} -> {2n: f_2n}, n <= top
// odd_fwd:  {2m+1: f} -> {2m+1: h} (y-exponent), m <= top
// odd_bwd:  {2n+1: h} -> {2n+1: f}, n <= top
template <CoefficientRing Ring>
std::map<long, typename Ring::value_type> closed_pairs(const Ring& ring, pair_direction dir,
                                                      const std::map<long, typename Ring::value_type>& in, long top) {
  using C = typename Ring::value_type;
  std::map<long, C> out;
  auto get = [&](long key) {
    auto it = in.find(key);
    return it == in.end() ? ring.zero() : it->second;
  };
  switch (dir) {
    case pair_direction::even_fwd: {
      detail::require_parity(in, 0, true);
      if (in.count(0)) out[0] = get(0);
      for (long m = 1; m <= top; ++m) {
        C h = ring.zero();
        for (long r = 0; r <= m - 1; ++r) {
          C f = get(2 * m - 2 * r);
          if (ring.is_zero(f)) continue;
          Rat c = ratio(factorial(m - 1) * factorial(2 * m - 2 * r - 1), factorial(m - r - 1) * factorial(2 * m - r - 1));
          c *= binomial(-m + r - 1, r);
          h = h + detail::nth_derivative(ring, f, r) * c;
        }
        out[m] = h;
      }
      break;
    }
    case pair_direction::even_bwd: {
      detail::require_parity(in, 0, false);
      if (in.count(0)) out[0] = get(0);
      for (long n = 1; n <= top; ++n) {
        C f = ring.zero();
        for (long r = 0; r <= n - 1; ++r) {
          C h = get(n - r);
          if (ring.is_zero(h)) continue;
          Rat c = ratio(factorial(n - 1) * factorial(2 * n - 2 - r), factorial(2 * n - 2) * factorial(n - 1 - r));
          c *= binomial(n, r);
          f = f + detail::nth_derivative(ring, h, r) * c;
        }
        out[2 * n] = f;
      }
      break;
    }
    case pair_direction::odd_fwd: {
      detail::require_parity(in, 1, true);
      for (long m = 0; m <= top; ++m) {
        C h = ring.zero();
        for (long r = 0; r <= m; ++r) {
          C f = get(2 * m - 2 * r + 1);
          if (ring.is_zero(f)) continue;
          Int fr = factorial(m - r);
          Rat c = ratio(factorial(2 * m + 1) * factorial(2 * m) * fr * fr,
                        factorial(m) * factorial(m) * factorial(r) * factorial(2 * m - 2 * r + 1) * factorial(2 * m - r));
          c /= rat_pow(Rat(16), r);
          if (r % 2) c = -c;
          h = h + detail::nth_derivative(ring, f, r) * c;
        }
        out[2 * m + 1] = h;
      }
      break;
    }
    case pair_direction::odd_bwd: {
      detail::require_parity(in, 1, true);
      for (long n = 0; n <= top; ++n) {
        C f = ring.zero();
        for (long r = 0; r <= n; ++r) {
          C h = get(2 * n - 2 * r + 1);
          if (ring.is_zero(h)) continue;
          // (2n)!(2n+1)!/((2n-1)! n!^2) (2n-1-r)! = (2n)!(2n+1)!/(n!^2 falling(2n-1, r))
          Int fr = factorial(n - r);
          Rat c = ratio(factorial(2 * n) * factorial(2 * n + 1) * fr * fr,
                        factorial(n) * factorial(n) * falling(2 * n - 1, r) * factorial(2 * n - 2 * r) * factorial(r) *
                            factorial(2 * n - 2 * r + 1));
          c /= rat_pow(Rat(16), r);
          f = f + detail::nth_derivative(ring, h, r) * c;
        }
        out[2 * n + 1] = f;
      }
      break;
    }
  }
  return out;
}

// psi_m(f|_m gamma) - psi_m(f) . gamma
inline QzSeries equivariance_residual(long m, const RatFunc& f, const GMatrix& g, Order order) {
  RationalFunctions ring;
  return psi(ring, m, slash(f, m, g), order) - act_series(psi(ring, m, f, order), g, order);
}

// phi_c(f) = psi_{-2k}(f) + c psi_{2k+2}(f^{(2k+1)})
inline QzSeries phi_c(long k, const Rat& c, const RatFunc& f, Order order) {
  RationalFunctions ring;
  RatFunc d = detail::nth_derivative(ring, f, 2 * k + 1);
  return psi(ring, -2 * k, f, order) + psi(ring, 2 * k + 2, d, order).scaled(c);
}

inline QzSeries phi_c_residual(long k, const Rat& c, const RatFunc& f, const GMatrix& g, Order order) {
  return phi_c(k, c, slash(f, -2 * k, g), order) - act_series(phi_c(k, c, f, order), g, order);
}

struct NegOddReport {
  long k = 0;
  long order = 0;
  long unknowns = 0;
  long equations = 0;
  long nullity = 0;
  bool leading_forced_zero = false;  // alpha(r) = 0 for r < 2k in every solution
  bool matches_shifted_lift = false;  // normalized solution = alpha_{2k+1}(n - 2k)
  std::vector<Rat> normalized;        // solution with alpha(2k) = 1, if nullity == 1
};

// Equivariance at weight -2k+1 as a linear system in alpha(0..M), M = max n with -2k+1+2n < order.
inline NegOddReport negodd_nonexistence(long k, long order) {
  if (k < 1) throw error(errc::invalid_argument, "k must be positive");
  RationalFunctions ring;
  long w = -2 * k + 1;
  long M = (order - 1 - w) / 2;
  NegOddReport rep;
  rep.k = k;
  rep.order = order;
  rep.unknowns = M + 1;
  Order N = Order::at(order);
  const RatFunc z = RatFunc::z();
  std::vector<RatFunc> tests{RatFunc(Poly(Rat(1)), Poly(std::vector<Rat>{1, 0, 1})),
                             (z - RatFunc(3)).pow(-2) + z, z.pow(M + 2 * k + 2)};
  std::vector<GMatrix> gens{GMatrix(1, 1, 0, 1), GMatrix(1, 0, 1, 1)};
  std::vector<std::vector<Rat>> rows;
  for (const auto& f : tests) {
    for (const auto& g : gens) {
      // residual of the n-th basis lift f^{(n)} y^{w+2n}
      std::vector<QzSeries> res;
      RatFunc fs = slash(f, w, g), dn = f, dsn = fs;
      for (long n = 0; n <= M; ++n) {
        if (n) {
          dn = dn.derivative();
          dsn = dsn.derivative();
        }
        QzSeries lhs = QzSeries::monomial(ring, dsn, w + 2 * n, N);
        QzSeries rhs = act_series(QzSeries::monomial(ring, dn, w + 2 * n, N), g, N);
        res.push_back(lhs - rhs);
      }
      for (long e = w; e < order; ++e) {
        std::vector<RatFunc> col;
        Poly L(Rat(1));
        for (const auto& r : res) {
          col.push_back(r.coefficient(e));
          L = L * Poly::exact_div(col.back().den(), Poly::gcd(L, col.back().den()));
        }
        long deg = -1;
        std::vector<Poly> nums;
        for (const auto& c : col) {
          nums.push_back(c.num() * Poly::exact_div(L, c.den()));
          deg = std::max(deg, nums.back().degree());
        }
        for (long p = 0; p <= deg; ++p) {
          std::vector<Rat> row;
          bool nz = false;
          for (const auto& nm : nums) {
            row.push_back(nm[p]);
            nz = nz || nm[p] != 0;
          }
          if (nz) rows.push_back(std::move(row));
        }
      }
    }
  }
  rep.equations = static_cast<long>(rows.size());
  auto basis = nullspace(rows, M + 1);
  rep.nullity = static_cast<long>(basis.size());
  rep.leading_forced_zero = true;
  for (const auto& b : basis)
    for (long r = 0; r < std::min(2 * k, M + 1); ++r)
      if (b[r] != 0) rep.leading_forced_zero = false;
  if (basis.size() == 1 && 2 * k <= M && basis[0][2 * k] != 0) {
    Rat s = basis[0][2 * k];
    rep.matches_shifted_lift = true;
    for (long n = 0; n <= M; ++n) {
      rep.normalized.push_back(basis[0][n] / s);
      Rat expect = n < 2 * k ? Rat(0) : lift_coeff(2 * k + 1, n - 2 * k);
      if (rep.normalized.back() != expect) rep.matches_shifted_lift = false;
    }
  }
  return rep;
}

}  // namespace pdo

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactcoef.hpp"
#include "rings.hpp"

namespace pdo {

// Truncation order of a series: a finite N (coefficients from N on unknown) or exact.
class Order {
 public:
  constexpr Order() = default;
  static constexpr Order exact() { return Order(); }
  static constexpr Order at(long n) {
    Order o;
    o.finite_ = true;
    o.n_ = n;
    return o;
  }
  constexpr bool is_exact() const { return !finite_; }
  long value() const {
    if (!finite_) throw error(errc::precision_required, "exact order has no value");
    return n_;
  }
  // is exponent e below the order (a known coefficient)?
  constexpr bool covers(long e) const { return !finite_ || e < n_; }

  friend constexpr bool operator==(const Order&, const Order&) = default;
  friend constexpr Order min(Order a, Order b) {
    if (!a.finite_) return b;
    if (!b.finite_) return a;
    return a.n_ <= b.n_ ? a : b;
  }
  friend constexpr Order operator+(Order a, long k) {
    if (a.finite_) a.n_ += k;
    return a;
  }
  friend constexpr Order operator-(Order a, long k) { return a + (-k); }
  std::string str() const { return finite_ ? std::to_string(n_) : "exact"; }

 private:
  bool finite_ = false;
  long n_ = 0;
};

inline constexpr Order exact_order = Order::exact();

// sum_{i>=val} coeffs[i-val] y^i + O(y^order)
template <CoefficientRing Ring>
class PDSeries {
 public:
  using coef_type = typename Ring::value_type;

  explicit PDSeries(Ring ring = Ring(), Order order = Order::exact()) : ring_(std::move(ring)), order_(order) {
    normalize();
  }
  PDSeries(Ring ring, long val, std::vector<coef_type> coeffs, Order order)
      : ring_(std::move(ring)), val_(val), coeffs_(std::move(coeffs)), order_(order) {
    normalize();
  }

  static PDSeries monomial(const Ring& ring, const coef_type& c, long e, Order order = Order::exact()) {
    return PDSeries(ring, e, {c}, order);
  }
  static PDSeries one(const Ring& ring, Order order = Order::exact()) {
    return monomial(ring, ring.one(), 0, order);
  }

  const Ring& ring() const { return ring_; }
  long valuation() const { return val_; }
  Order order() const { return order_; }
  bool is_exact() const { return order_.is_exact(); }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<coef_type>& coeffs() const { return coeffs_; }
  // one past the last stored exponent
  long end() const { return val_ + static_cast<long>(coeffs_.size()); }

  coef_type coefficient(long e) const {
    if (!order_.covers(e))
      throw error(errc::precision_required, "coefficient of y^" + std::to_string(e) + " is beyond order " + order_.str());
    if (e < val_ || e >= end()) return ring_.zero();
    return coeffs_[e - val_];
  }
  const coef_type& leading() const {
    if (is_zero()) throw error(errc::zero_element, "zero series has no leading coefficient");
    return coeffs_.front();
  }
  bool is_monomial() const { return coeffs_.size() == 1; }

  PDSeries truncated(Order n) const { return PDSeries(ring_, val_, coeffs_, min(order_, n)); }

  bool has_support_parity(int parity) const {
    for (long e = val_; e < end(); ++e)
      if (!ring_.is_zero(coeffs_[e - val_]) && ((e % 2) + 2) % 2 != parity) return false;
    return true;
  }
  bool is_even() const { return has_support_parity(0); }

  friend bool operator==(const PDSeries& a, const PDSeries& b) {
    return a.ring_ == b.ring_ && a.order_ == b.order_ && a.val_ == b.val_ && a.coeffs_ == b.coeffs_;
  }

  PDSeries operator-() const {
    PDSeries r = *this;
    for (auto& c : r.coeffs_) c = c * Rat(-1);
    return r;
  }

  friend PDSeries operator+(const PDSeries& a, const PDSeries& b) { return combine(a, b, false); }
  friend PDSeries operator-(const PDSeries& a, const PDSeries& b) { return combine(a, b, true); }
  PDSeries& operator+=(const PDSeries& o) { return *this = *this + o; }
  PDSeries& operator-=(const PDSeries& o) { return *this = *this - o; }

  // c * q, coefficientwise (no commutation needed on the left)
  PDSeries scale_left(const coef_type& c) const {
    std::vector<coef_type> r;
    r.reserve(coeffs_.size());
    for (const auto& x : coeffs_) r.push_back(c * x);
    return PDSeries(ring_, val_, std::move(r), order_);
  }
  PDSeries scaled(const Rat& s) const {
    std::vector<coef_type> r;
    r.reserve(coeffs_.size());
    for (const auto& x : coeffs_) r.push_back(x * s);
    return PDSeries(ring_, val_, std::move(r), order_);
  }

  std::string str() const {
    std::string s;
    for (long e = val_; e < end(); ++e) {
      const auto& c = coeffs_[e - val_];
      if (ring_.is_zero(c)) continue;
      if (!s.empty()) s += " + ";
      s += "(" + ring_.str(c) + ")*y^" + std::to_string(e);
    }
    if (s.empty()) s = "0";
    if (!order_.is_exact()) s += " + O(y^" + order_.str() + ")";
    return s;
  }

 private:
  static PDSeries combine(const PDSeries& a, const PDSeries& b, bool subtract) {
    if (!(a.ring_ == b.ring_)) throw error(errc::ring_mismatch, "series over different rings");
    Order n = min(a.order_, b.order_);
    if (a.is_zero() && b.is_zero()) return PDSeries(a.ring_, n);
    long lo = a.is_zero() ? b.val_ : b.is_zero() ? a.val_ : std::min(a.val_, b.val_);
    long hi = std::max(a.end(), b.end());
    std::vector<coef_type> r(hi - lo, a.ring_.zero());
    for (long e = a.val_; e < a.end(); ++e) r[e - lo] = a.coeffs_[e - a.val_];
    for (long e = b.val_; e < b.end(); ++e) {
      if (subtract) r[e - lo] = r[e - lo] - b.coeffs_[e - b.val_];
      else r[e - lo] = r[e - lo] + b.coeffs_[e - b.val_];
    }
    return PDSeries(a.ring_, lo, std::move(r), n);
  }

  void normalize() {
    if (!order_.is_exact()) {
      long n = order_.value();
      if (end() > n) coeffs_.resize(std::max(0L, n - val_), ring_.zero());
    }
    size_t lead = 0;
    while (lead < coeffs_.size() && ring_.is_zero(coeffs_[lead])) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      val_ = order_.is_exact() ? 0 : order_.value();
      return;
    }
    if (lead) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
      val_ += static_cast<long>(lead);
    }
    while (ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  Ring ring_;
  long val_ = 0;
  std::vector<coef_type> coeffs_;
  Order order_;
};

namespace detail {

// d^u/dz^u of a coefficient, cached
template <CoefficientRing Ring>
class derivative_cache {
 public:
  using C = typename Ring::value_type;
  derivative_cache(const Ring& ring, C base) : ring_(ring) { d_.push_back(std::move(base)); }
  const C& operator()(long u) {
    while (static_cast<long>(d_.size()) <= u) {
      if (ring_.is_zero(d_.back())) return d_.back();
      d_.push_back(ring_.derivative(d_.back()));
    }
    return d_[u];
  }

 private:
  const Ring& ring_;
  std::vector<C> d_;
};

// c_i(u) (-1/2)^u, i.e. the coefficient of d^u(f) in y^i f, for u < count
inline std::vector<Rat> law_coefficients(long i, long count) {
  std::vector<Rat> c;
  Rat r = 1;
  for (long u = 0; u < count; ++u) {
    c.push_back(r);
    r *= i + 2 * u;
    r /= -2 * (u + 1);
    if (r == 0) break;
  }
  return c;
}

// Coefficients of y^i q at exponents [i + q.val, hi), using cached derivatives of q.
template <CoefficientRing Ring>
std::vector<typename Ring::value_type> shifted(long i, long qval, std::vector<derivative_cache<Ring>>& dq,
                                               const Ring& ring, long hi) {
  using C = typename Ring::value_type;
  long lo = i + qval;
  std::vector<C> t(std::max(0L, hi - lo), ring.zero());
  if (hi <= lo) return t;
  auto cs = law_coefficients(i, (hi - lo + 1) / 2 + 1);
  for (long j = 0; j < static_cast<long>(dq.size()); ++j) {
    for (long u = 0; u < static_cast<long>(cs.size()); ++u) {
      long e = lo + j + 2 * u;
      if (e >= hi) break;
      const C& d = dq[j](u);
      if (ring.is_zero(d)) break;
      t[e - lo] = t[e - lo] + d * cs[u];
    }
  }
  return t;
}

}  // namespace detail

// p q, to order min(N_p + v_q, N_q + v_p) and at most cap
template <CoefficientRing Ring>
PDSeries<Ring> mul(const PDSeries<Ring>& p, const PDSeries<Ring>& q, Order cap = Order::exact()) {
  using C = typename Ring::value_type;
  if (!(p.ring() == q.ring())) throw error(errc::ring_mismatch, "series over different rings");
  const Ring& ring = p.ring();
  Order natural = min(p.order() + q.valuation(), q.order() + p.valuation());
  Order target = min(natural, cap);
  if (p.is_zero() || q.is_zero()) return PDSeries<Ring>(ring, target);

  long hi;
  if (target.is_exact()) {
    long top = p.valuation() + q.valuation();
    for (long i = p.valuation(); i < p.end(); ++i) {
      if (ring.is_zero(p.coefficient(i))) continue;
      for (long j = q.valuation(); j < q.end(); ++j) {
        const C& b = q.coefficient(j);
        if (ring.is_zero(b)) continue;
        std::optional<long> umax;
        if (i <= 0 && i % 2 == 0) umax = -i / 2;
        auto nil = ring.derivative_nilpotency(b);
        if (nil) umax = umax ? std::min(*umax, *nil - 1) : *nil - 1;
        if (!umax)
          throw error(errc::precision_required,
                      "product of exact series does not terminate; give a working order");
        top = std::max(top, i + j + 2 * *umax);
      }
    }
    hi = top + 1;
  } else {
    hi = target.value();
  }

  long lo = p.valuation() + q.valuation();
  std::vector<C> res(std::max(0L, hi - lo), ring.zero());
  std::vector<detail::derivative_cache<Ring>> dq;
  for (long j = q.valuation(); j < std::min(q.end(), hi - p.valuation()); ++j)
    dq.emplace_back(ring, q.coefficient(j));
  for (long i = p.valuation(); i < std::min(p.end(), hi - q.valuation()); ++i) {
    const C& a = p.coefficient(i);
    if (ring.is_zero(a)) continue;
    auto t = detail::shifted(i, q.valuation(), dq, ring, hi);
    for (size_t s = 0; s < t.size(); ++s)
      if (!ring.is_zero(t[s])) res[i + q.valuation() + s - lo] = res[i + q.valuation() + s - lo] + a * t[s];
  }
  return PDSeries<Ring>(ring, lo, std::move(res), target);
}

template <CoefficientRing Ring>
PDSeries<Ring> operator*(const PDSeries<Ring>& p, const PDSeries<Ring>& q) {
  return mul(p, q);
}

// right multiplication by a coefficient: q f
template <CoefficientRing Ring>
PDSeries<Ring> mul_right(const PDSeries<Ring>& q, const typename Ring::value_type& f, Order cap = Order::exact()) {
  return mul(q, PDSeries<Ring>::monomial(q.ring(), f, 0), cap);
}

template <CoefficientRing Ring>
PDSeries<Ring> power(const PDSeries<Ring>& q, long k, Order cap = Order::exact());

// two-sided inverse, order N - 2v
template <CoefficientRing Ring>
PDSeries<Ring> inverse(const PDSeries<Ring>& q, Order cap = Order::exact()) {
  using C = typename Ring::value_type;
  const Ring& ring = q.ring();
  if (q.is_zero()) throw error(errc::not_invertible, "zero series");
  if (!ring.is_unit(q.leading())) throw error(errc::not_invertible, "leading coefficient is not a unit");
  long v = q.valuation();
  C ainv = ring.unit_inverse(q.leading());
  if (q.is_exact() && q.is_monomial())
    return mul(PDSeries<Ring>::monomial(ring, ring.one(), -v), PDSeries<Ring>::monomial(ring, ainv, 0), cap);
  Order target = min(q.order() - 2 * v, cap);
  if (target.is_exact()) throw error(errc::precision_required, "inverse of an exact non-monomial series");
  long T = target.value();
  long hi = T + v;  // exponents of q-bar * q we must match

  std::vector<detail::derivative_cache<Ring>> dq;
  for (long j = v; j < std::min(q.end(), hi + v); ++j) dq.emplace_back(ring, q.coefficient(j));
  std::vector<C> c;
  std::vector<std::vector<C>> S;  // S[k'] = y^{k'} q from exponent k'+v
  for (long k = -v; k < T; ++k) {
    long e = k + v;
    C acc = (e == 0) ? ring.one() : ring.zero();
    for (long kp = -v; kp < k; ++kp) {
      const C& ck = c[kp + v];
      if (ring.is_zero(ck)) continue;
      const auto& s = S[kp + v];
      long idx = e - (kp + v);
      if (idx < static_cast<long>(s.size()) && !ring.is_zero(s[idx])) acc = acc - ck * s[idx];
    }
    C ck = ring.is_zero(acc) ? ring.zero() : ainv * acc;
    c.push_back(ck);
    S.push_back(ring.is_zero(ck) ? std::vector<C>{} : detail::shifted(k, v, dq, ring, hi));
  }
  return PDSeries<Ring>(ring, -v, std::move(c), target);
}

// the z with z^2 = q and leading coefficient e; order N - h for v(q) = 2h
template <CoefficientRing Ring>
PDSeries<Ring> sqrt(const PDSeries<Ring>& q, const typename Ring::value_type& e, Order cap = Order::exact()) {
  using C = typename Ring::value_type;
  const Ring& ring = q.ring();
  if (q.is_zero()) throw error(errc::not_invertible, "square root of zero series");
  long v = q.valuation();
  if (v % 2 != 0) throw error(errc::odd_valuation, "valuation " + std::to_string(v) + " is odd");
  long h = v / 2;
  if (!(e * e == q.leading())) throw error(errc::bad_root, "e^2 differs from the leading coefficient");
  if (!ring.is_unit(e)) throw error(errc::not_a_unit, "root of the leading coefficient must be a unit");
  Order target = min(q.order() - h, cap);
  if (target.is_exact()) {
    auto nil = ring.derivative_nilpotency(e);
    if (q.is_monomial() && nil && *nil <= 1) return PDSeries<Ring>::monomial(ring, e, h);
    throw error(errc::precision_required, "square root of an exact series needs a working order");
  }
  long T = target.value();
  C inv2e = ring.unit_inverse(e) * Rat(1, 2);
  std::vector<C> z{e};
  std::vector<detail::derivative_cache<Ring>> dz;
  dz.emplace_back(ring, e);
  for (long t = 1; h + t < T; ++t) {
    long E = 2 * h + t;
    C known = ring.zero();
    for (long i = h; i < h + t; ++i) {
      const C& ei = z[i - h];
      if (ring.is_zero(ei)) continue;
      // sum_{j,u} c_i(u) (-1/2)^u d^u(e_j), i + j + 2u = E, h <= j < h+t
      auto cs = detail::law_coefficients(i, (E - i - h) / 2 + 1);
      C inner = ring.zero();
      for (long u = 0; u < static_cast<long>(cs.size()); ++u) {
        long j = E - i - 2 * u;
        if (j < h) break;
        if (j >= h + t) continue;
        const C& d = dz[j - h](u);
        if (!ring.is_zero(d)) inner = inner + d * cs[u];
      }
      if (!ring.is_zero(inner)) known = known + ei * inner;
    }
    C next = inv2e * (q.coefficient(E) - known);
    z.push_back(next);
    dz.emplace_back(ring, next);
  }
  return PDSeries<Ring>(ring, h, std::move(z), target);
}

template <CoefficientRing Ring>
PDSeries<Ring> power(const PDSeries<Ring>& q, long k, Order cap) {
  if (k < 0) return power(inverse(q, cap), -k, cap);
  PDSeries<Ring> r = PDSeries<Ring>::one(q.ring());
  for (long i = 0; i < k; ++i) r = mul(r, q, cap);
  return r;
}

template <CoefficientRing Ring>
std::pair<PDSeries<Ring>, PDSeries<Ring>> split_even_odd(const PDSeries<Ring>& q) {
  using C = typename Ring::value_type;
  std::vector<C> ev, od;
  for (long e = q.valuation(); e < q.end(); ++e) {
    const C& c = q.coefficient(e);
    bool even = (e % 2 == 0);
    ev.push_back(even ? c : q.ring().zero());
    od.push_back(even ? q.ring().zero() : c);
  }
  return {PDSeries<Ring>(q.ring(), q.valuation(), std::move(ev), q.order()),
          PDSeries<Ring>(q.ring(), q.valuation(), std::move(od), q.order())};
}

// p == q up to the smaller of the two orders
template <CoefficientRing Ring>
bool agree(const PDSeries<Ring>& p, const PDSeries<Ring>& q) {
  return (p - q).is_zero();
}

using QzSeries = PDSeries<RationalFunctions>;
using GradedSeries = PDSeries<GradedRing>;

}  // namespace pdo

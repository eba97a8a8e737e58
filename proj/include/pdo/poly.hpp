#pragma once

#include <utility>
#include <vector>

#include "rat.hpp"

namespace pdo {

// Dense polynomial over Q in z, ascending coefficients, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c) {  // NOLINT: constants convert implicitly
    if (c != 0) c_.push_back(c);
  }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly z() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }
  static Poly linear(const Rat& c1, const Rat& c0) { return Poly(std::vector<Rat>{c0, c1}); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat operator[](long i) const { return (i >= 0 && i <= degree()) ? c_[i] : Rat(0); }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

  friend bool operator==(const Poly&, const Poly&) = default;

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Rat& s) const {
    if (s == 0) return {};
    Poly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  Poly monic() const { return is_zero() ? *this : scaled(Rat(1) / lead()); }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(r));
  }

  Poly pow(long e) const {
    Poly r(Rat(1)), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  Rat eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  // (q, r) with a = q b + r, deg r < deg b
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> q(a.c_.size() - b.c_.size() + 1);
    Rat inv_lead = Rat(1) / b.lead();
    long db = b.degree();
    for (long i = a.degree(); i >= db; --i) {
      if (rem[i] == 0) continue;
      Rat f = rem[i] * inv_lead;
      q[i - db] = f;
      for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
    }
    rem.resize(db);
    return {Poly(std::move(q)), Poly(std::move(rem))};
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  // exact division, caller guarantees b | a
  static Poly exact_div(const Poly& a, const Poly& b) { return divmod(a, b).first; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

}  // namespace pdo

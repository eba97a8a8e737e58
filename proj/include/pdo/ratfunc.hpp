#pragma once

#include <array>
#include <optional>
#include <string>

#include "poly.hpp"

namespace pdo {

// Element of Q(z): num/den, den monic, gcd 1.
class RatFunc {
 public:
  RatFunc() : den_(Rat(1)) {}
  RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rat(c)) {}               // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(Rat(1)) {}  // NOLINT
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc z() { return RatFunc(Poly::z()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  Rat constant_value() const { return num_[0]; }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    // Henrici: g = gcd(d1, d2)
    Poly g = Poly::gcd(a.den_, b.den_);
    if (g.degree() == 0) return raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly d1 = Poly::exact_div(a.den_, g), d2 = Poly::exact_div(b.den_, g);
    Poly t = a.num_ * d2 + b.num_ * d1;
    if (t.is_zero()) return RatFunc();
    Poly g2 = Poly::gcd(t, g);
    if (g2.degree() > 0) {
      t = Poly::exact_div(t, g2);
      g = Poly::exact_div(g, g2);
    }
    return raw(std::move(t), d1 * d2 * g);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.is_polynomial() && b.is_polynomial()) return raw(a.num_ * b.num_, Poly(Rat(1)));
    Poly g1 = Poly::gcd(a.num_, b.den_), g2 = Poly::gcd(b.num_, a.den_);
    Poly n1 = Poly::exact_div(a.num_, g1), d2 = Poly::exact_div(b.den_, g1);
    Poly n2 = Poly::exact_div(b.num_, g2), d1 = Poly::exact_div(a.den_, g2);
    return raw(n1 * n2, d1 * d2);
  }
  friend RatFunc operator*(const RatFunc& a, const Rat& s) {
    if (s == 0 || a.is_zero()) return RatFunc();
    RatFunc r = a;
    r.num_ = r.num_.scaled(s);
    return r;
  }
  friend RatFunc operator*(const Rat& s, const RatFunc& a) { return a * s; }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc inverse() const {
    if (is_zero()) throw error(errc::division_by_zero, "inverse of zero rational function");
    return RatFunc(den_, num_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return raw(num_.pow(e), den_.pow(e));
  }

  // d/dz
  RatFunc derivative() const {
    if (is_polynomial()) return RatFunc(num_.derivative());
    Poly dd = den_.derivative();
    Poly h = Poly::gcd(den_, dd);
    Poly q = Poly::exact_div(den_, h);
    Poly n = num_.derivative() * q - num_ * Poly::exact_div(dd, h);
    return RatFunc(std::move(n), den_ * q);
  }

  // degree+1 for polynomials: the number of derivatives that survive
  std::optional<long> derivative_nilpotency() const {
    if (!is_polynomial()) return std::nullopt;
    return num_.degree() + 1;
  }

  std::string str() const;

 private:
  // trusted: already coprime, den nonzero
  static RatFunc raw(Poly n, Poly d) {
    RatFunc r;
    if (n.is_zero()) return r;
    Rat l = d.lead();
    r.num_ = (l == 1) ? std::move(n) : n.scaled(Rat(1) / l);
    r.den_ = (l == 1) ? std::move(d) : d.scaled(Rat(1) / l);
    return r;
  }
  void normalize() {
    if (den_.is_zero()) throw error(errc::division_by_zero, "zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(Rat(1));
      return;
    }
    if (den_.degree() > 0) {
      Poly g = Poly::gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = Poly::exact_div(num_, g);
        den_ = Poly::exact_div(den_, g);
      }
    }
    Rat l = den_.lead();
    if (l != 1) {
      num_ = num_.scaled(Rat(1) / l);
      den_ = den_.scaled(Rat(1) / l);
    }
  }

  Poly num_;
  Poly den_;
};

inline std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (long i = p.degree(); i >= 0; --i) {
    Rat c = p[i];
    if (c == 0) continue;
    std::string cs = c.get_str();
    if (!s.empty()) {
      if (c < 0) {
        s += " - ";
        cs = Rat(-c).get_str();
      } else {
        s += " + ";
      }
    }
    if (i == 0) s += cs;
    else {
      if (cs == "-1") s += "-";
      else if (cs != "1") s += cs + "*";
      s += i == 1 ? "z" : "z^" + std::to_string(i);
    }
  }
  return s;
}

inline std::string RatFunc::str() const {
  if (is_polynomial()) return poly_str(num_);
  return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

// [[a,b],[c,d]] in SL(2,Q)
class GMatrix {
 public:
  GMatrix() : a_(1), b_(0), c_(0), d_(1) {}
  GMatrix(const Rat& a, const Rat& b, const Rat& c, const Rat& d) : a_(a), b_(b), c_(c), d_(d) {
    if (a_ * d_ - b_ * c_ != 1) throw error(errc::not_unimodular, "ad - bc != 1");
  }
  static GMatrix identity() { return {}; }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  const Rat& d() const { return d_; }

  friend bool operator==(const GMatrix&, const GMatrix&) = default;
  friend GMatrix operator*(const GMatrix& x, const GMatrix& y) {
    return GMatrix(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
                   x.c_ * y.b_ + x.d_ * y.d_);
  }
  GMatrix inverse() const { return GMatrix(d_, -b_, -c_, a_); }

  // s_gamma = cz + d
  RatFunc s() const { return RatFunc(Poly::linear(c_, d_)); }

  std::string str() const {
    return "[[" + a_.get_str() + "," + b_.get_str() + "],[" + c_.get_str() + "," + d_.get_str() + "]]";
  }

 private:
  Rat a_, b_, c_, d_;
};

// z -> f((az+b)/(cz+d))
inline RatFunc mobius_compose(const RatFunc& f, const GMatrix& g) {
  if (f.is_constant()) return f;
  Poly P = Poly::linear(g.a(), g.b()), Q = Poly::linear(g.c(), g.d());
  auto hom = [&](const Poly& p, long n) {
    // sum p_i P^i Q^{n-i}
    Poly r;
    std::vector<Poly> qp(n + 1);
    qp[0] = Poly(Rat(1));
    for (long i = 1; i <= n; ++i) qp[i] = qp[i - 1] * Q;
    Poly pp(Rat(1));
    for (long i = 0; i <= p.degree(); ++i) {
      if (p[i] != 0) r += (pp * qp[n - i]).scaled(p[i]);
      pp *= P;
    }
    return r;
  };
  long n = f.num().degree(), m = f.den().degree();
  Poly num = hom(f.num(), n), den = hom(f.den(), m);
  if (m > n) num *= Q.pow(m - n);
  else if (n > m) den *= Q.pow(n - m);
  return RatFunc(std::move(num), std::move(den));
}

}  // namespace pdo

#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rat.hpp"

namespace pdo {

struct Generator {
  std::string name;
  long weight = 0;
  bool invertible = false;
  friend bool operator==(const Generator&, const Generator&) = default;
};

class GradedRingSpec {
 public:
  GradedRingSpec() = default;
  explicit GradedRingSpec(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (size_t i = 0; i < gens_.size(); ++i)
      for (size_t j = i + 1; j < gens_.size(); ++j)
        if (gens_[i].name == gens_[j].name)
          throw error(errc::invalid_argument, "duplicate generator name '" + gens_[i].name + "'");
  }
  const std::vector<Generator>& generators() const { return gens_; }
  size_t size() const { return gens_.size(); }
  const Generator& operator[](size_t i) const { return gens_.at(i); }
  std::optional<int> index_of(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i].name == name) return static_cast<int>(i);
    return std::nullopt;
  }
  friend bool operator==(const GradedRingSpec&, const GradedRingSpec&) = default;

 private:
  std::vector<Generator> gens_;
};

// g_gen^{(deriv)} raised to exp
struct Factor {
  int gen = 0;
  int deriv = 0;
  int exp = 1;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

// sorted by (gen, deriv), exponents nonzero
using Monomial = std::vector<Factor>;

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && std::tie(a[i].gen, a[i].deriv) < std::tie(b[j].gen, b[j].deriv))) {
      r.push_back(a[i++]);
    } else if (i == a.size() || std::tie(b[j].gen, b[j].deriv) < std::tie(a[i].gen, a[i].deriv)) {
      r.push_back(b[j++]);
    } else {
      int e = a[i].exp + b[j].exp;
      if (e != 0) r.push_back({a[i].gen, a[i].deriv, e});
      ++i;
      ++j;
    }
  }
  return r;
}

class GradedElem {
 public:
  using Terms = std::map<Monomial, Rat>;

  GradedElem() = default;
  GradedElem(const Rat& c) {  // NOLINT
    if (c != 0) terms_[Monomial{}] = c;
  }
  GradedElem(long c) : GradedElem(Rat(c)) {}  // NOLINT
  GradedElem(Monomial m, const Rat& c) {
    if (c != 0) terms_[std::move(m)] = c;
  }

  // g_i^{(j)} ^ e, checked against the spec
  static GradedElem gen(const GradedRingSpec& spec, int i, int j = 0, int e = 1) {
    if (i < 0 || static_cast<size_t>(i) >= spec.size())
      throw error(errc::invalid_argument, "generator index out of range");
    if (j < 0) throw error(errc::invalid_argument, "negative derivative order");
    if (e < 0 && (j != 0 || !spec[i].invertible))
      throw error(errc::not_a_unit, "negative power of non-invertible " + spec[i].name);
    if (e == 0) return GradedElem(Rat(1));
    return GradedElem(Monomial{{i, j, e}}, Rat(1));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Rat coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  friend bool operator==(const GradedElem&, const GradedElem&) = default;

  void add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GradedElem operator-() const {
    GradedElem r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  GradedElem& operator+=(const GradedElem& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  GradedElem& operator-=(const GradedElem& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend GradedElem operator+(GradedElem a, const GradedElem& b) { return a += b; }
  friend GradedElem operator-(GradedElem a, const GradedElem& b) { return a -= b; }
  friend GradedElem operator*(const GradedElem& a, const GradedElem& b) {
    GradedElem r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  friend GradedElem operator*(const GradedElem& a, const Rat& s) {
    if (s == 0) return {};
    GradedElem r = a;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
  }
  friend GradedElem operator*(const Rat& s, const GradedElem& a) { return a * s; }
  GradedElem& operator*=(const GradedElem& o) { return *this = *this * o; }

  // free derivation: g^{(j)} -> g^{(j+1)}, Leibniz
  GradedElem derivative() const {
    GradedElem r;
    for (const auto& [m, c] : terms_) {
      for (size_t k = 0; k < m.size(); ++k) {
        const Factor& f = m[k];
        Monomial rest = m;
        if (f.exp == 1) rest.erase(rest.begin() + k);
        else rest[k].exp -= 1;
        Monomial d = mono_mul(rest, Monomial{{f.gen, f.deriv + 1, 1}});
        r.add_term(d, c * f.exp);
      }
    }
    return r;
  }

  bool is_unit(const GradedRingSpec& spec) const {
    if (terms_.size() != 1) return false;
    for (const auto& f : terms_.begin()->first)
      if (f.deriv != 0 || !spec[f.gen].invertible) return false;
    return true;
  }

  GradedElem inv_unit(const GradedRingSpec& spec) const {
    if (!is_unit(spec)) throw error(errc::not_a_unit, "not a unit monomial");
    const auto& [m, c] = *terms_.begin();
    Monomial inv = m;
    for (auto& f : inv) f.exp = -f.exp;
    return GradedElem(std::move(inv), Rat(1) / c);
  }

  static long monomial_weight(const GradedRingSpec& spec, const Monomial& m) {
    long w = 0;
    for (const auto& f : m) w += static_cast<long>(f.exp) * (spec[f.gen].weight + 2L * f.deriv);
    return w;
  }

  // nullopt when not homogeneous
  std::optional<long> weight_of(const GradedRingSpec& spec) const {
    if (is_zero()) throw error(errc::zero_element, "weight of zero is undefined");
    std::optional<long> w;
    for (const auto& [m, c] : terms_) {
      long mw = monomial_weight(spec, m);
      if (w && *w != mw) return std::nullopt;
      w = mw;
    }
    return w;
  }

  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

  std::string str(const GradedRingSpec& spec) const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      std::string cs = c.get_str();
      if (!s.empty()) {
        if (c < 0) {
          s += " - ";
          cs = Rat(-c).get_str();
        } else {
          s += " + ";
        }
      }
      std::string ms;
      for (const auto& f : m) {
        if (!ms.empty()) ms += "*";
        ms += spec[f.gen].name;
        if (f.deriv) ms += "^(" + std::to_string(f.deriv) + ")";
        if (f.exp != 1) ms += "^" + (f.exp < 0 ? "{" + std::to_string(f.exp) + "}" : std::to_string(f.exp));
      }
      if (ms.empty()) s += cs;
      else if (cs == "1") s += ms;
      else if (cs == "-1") s += "-" + ms;
      else s += cs + "*" + ms;
    }
    return s;
  }

 private:
  Terms terms_;
};

}  // namespace pdo

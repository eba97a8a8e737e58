#pragma once

#include <concepts>
#include <memory>
#include <optional>
#include <string>

#include "graded.hpp"
#include "ratfunc.hpp"

namespace pdo {

// A commutative coefficient ring with the derivation d/dz (or the free derivation).
template <class R>
concept CoefficientRing = requires(const R& r, const typename R::value_type& a, const Rat& q, long m) {
  { r.zero() } -> std::same_as<typename R::value_type>;
  { r.one() } -> std::same_as<typename R::value_type>;
  { r.constant(q) } -> std::same_as<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.derivative(a) } -> std::same_as<typename R::value_type>;
  { r.is_unit(a) } -> std::convertible_to<bool>;
  { r.unit_inverse(a) } -> std::same_as<typename R::value_type>;
  { r.derivative_nilpotency(a) } -> std::same_as<std::optional<long>>;
  { r.check_weight(a, m) };
  { r.name() } -> std::convertible_to<std::string>;
  { r == r } -> std::convertible_to<bool>;
  { a + a } -> std::convertible_to<typename R::value_type>;
  { a - a } -> std::convertible_to<typename R::value_type>;
  { a * a } -> std::convertible_to<typename R::value_type>;
  { a * q } -> std::convertible_to<typename R::value_type>;
};

struct RationalFunctions {
  using value_type = RatFunc;

  RatFunc zero() const { return RatFunc(); }
  RatFunc one() const { return RatFunc(Rat(1)); }
  RatFunc constant(const Rat& q) const { return RatFunc(q); }
  bool is_zero(const RatFunc& a) const { return a.is_zero(); }
  RatFunc derivative(const RatFunc& a) const { return a.derivative(); }
  bool is_unit(const RatFunc& a) const { return !a.is_zero(); }
  RatFunc unit_inverse(const RatFunc& a) const {
    if (a.is_zero()) throw error(errc::not_a_unit, "zero is not a unit");
    return a.inverse();
  }
  std::optional<long> derivative_nilpotency(const RatFunc& a) const {
    if (a.is_zero()) return 0;
    return a.derivative_nilpotency();
  }
  void check_weight(const RatFunc&, long) const {}
  std::string name() const { return "qz"; }
  std::string str(const RatFunc& a) const { return a.str(); }
  friend bool operator==(const RationalFunctions&, const RationalFunctions&) { return true; }
};

class GradedRing {
 public:
  using value_type = GradedElem;

  GradedRing() : spec_(std::make_shared<GradedRingSpec>()) {}
  explicit GradedRing(GradedRingSpec spec) : spec_(std::make_shared<const GradedRingSpec>(std::move(spec))) {}
  explicit GradedRing(std::shared_ptr<const GradedRingSpec> spec) : spec_(std::move(spec)) {}

  const GradedRingSpec& spec() const { return *spec_; }
  GradedElem gen(const std::string& name, int j = 0, int e = 1) const {
    auto i = spec_->index_of(name);
    if (!i) throw error(errc::invalid_argument, "no generator named '" + name + "'");
    return GradedElem::gen(*spec_, *i, j, e);
  }
  GradedElem gen(int i, int j = 0, int e = 1) const { return GradedElem::gen(*spec_, i, j, e); }

  GradedElem zero() const { return GradedElem(); }
  GradedElem one() const { return GradedElem(Rat(1)); }
  GradedElem constant(const Rat& q) const { return GradedElem(q); }
  bool is_zero(const GradedElem& a) const { return a.is_zero(); }
  GradedElem derivative(const GradedElem& a) const { return a.derivative(); }
  bool is_unit(const GradedElem& a) const { return a.is_unit(*spec_); }
  GradedElem unit_inverse(const GradedElem& a) const { return a.inv_unit(*spec_); }
  std::optional<long> derivative_nilpotency(const GradedElem& a) const {
    if (a.is_zero()) return 0;
    if (a.is_constant()) return 1;
    return std::nullopt;
  }
  std::optional<long> weight_of(const GradedElem& a) const { return a.weight_of(*spec_); }
  void check_weight(const GradedElem& a, long m) const {
    if (a.is_zero()) return;
    auto w = a.weight_of(*spec_);
    if (!w || *w != m)
      throw error(errc::not_homogeneous, "expected weight " + std::to_string(m) + " for " + a.str(*spec_));
  }
  std::string name() const { return "graded"; }
  std::string str(const GradedElem& a) const { return a.str(*spec_); }
  friend bool operator==(const GradedRing& x, const GradedRing& y) {
    return x.spec_ == y.spec_ || *x.spec_ == *y.spec_;
  }

 private:
  std::shared_ptr<const GradedRingSpec> spec_;
};

static_assert(CoefficientRing<RationalFunctions>);
static_assert(CoefficientRing<GradedRing>);

}  // namespace pdo

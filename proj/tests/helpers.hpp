#pragma once

#include <doctest.h>

#include "pdo/pdo.hpp"

namespace t {
using namespace pdo;

inline Rat q(long p, long d = 1) { return make_rat(p, d); }
inline RatFunc z() { return RatFunc::z(); }
inline RatFunc rf(std::vector<Rat> num, std::vector<Rat> den = {Rat(1)}) { return RatFunc(Poly(std::move(num)), Poly(std::move(den))); }

inline const GMatrix T(1, 1, 0, 1), S(0, -1, 1, 0), L(1, 0, 1, 1), U(2, 1, 3, 2);

inline GradedRing chi_ring() { return GradedRing(GradedRingSpec({{"chi", 2, true}, {"xi", 1, true}, {"a", 0, false}, {"b", 0, false}})); }

template <class Ring>
bool same_to(const PDSeries<Ring>& p, const PDSeries<Ring>& q, long n) {
  return agree(p.truncated(Order::at(n)), q.truncated(Order::at(n))) && p.order().covers(n - 1) && q.order().covers(n - 1);
}
}  // namespace t

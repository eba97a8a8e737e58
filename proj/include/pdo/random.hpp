#pragma once

#include <random>
#include <vector>

#include "graded.hpp"
#include "ratfunc.hpp"
#include "series.hpp"

namespace pdo {

// Small deterministic generators for property checks.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rat rational(long span = 5, long maxden = 4) {
    return make_rat(integer(-span, span), integer(1, maxden));
  }
  Rat nonzero_rational(long span = 5, long maxden = 4) {
    Rat r;
    do r = rational(span, maxden);
    while (r == 0);
    return r;
  }

  Poly poly(long maxdeg) {
    std::vector<Rat> c;
    long d = integer(0, maxdeg);
    for (long i = 0; i <= d; ++i) c.push_back(rational(4, 3));
    return Poly(std::move(c));
  }

  RatFunc ratfunc(long maxdeg = 2) {
    Poly den;
    do den = poly(maxdeg);
    while (den.is_zero());
    Poly num;
    do num = poly(maxdeg);
    while (num.is_zero());
    return RatFunc(num, den);
  }

  GMatrix gmatrix() {
    static const GMatrix S(0, -1, 1, 0), U(2, 1, 3, 2);
    GMatrix g;
    long len = integer(1, 3);
    for (long i = 0; i < len; ++i) {
      switch (integer(0, 3)) {
        case 0: g = g * GMatrix(1, integer(-2, 2), 0, 1); break;
        case 1: g = g * S; break;
        case 2: g = g * U; break;
        default: {
          Rat q = make_rat(integer(1, 3), integer(1, 2));
          g = g * GMatrix(q, 0, 0, Rat(1) / q);
        }
      }
    }
    return g;
  }

  QzSeries qz_series(long vlo, long vhi, long order, long maxdeg = 1) {
    long v = integer(vlo, vhi);
    std::vector<RatFunc> c;
    for (long e = v; e < order; ++e) c.push_back(integer(0, 2) ? ratfunc(maxdeg) : RatFunc());
    if (!c.empty()) c[0] = ratfunc(maxdeg);
    return QzSeries(RationalFunctions{}, v, std::move(c), Order::at(order));
  }

  // random homogeneous element of the given weight from monomials in the generators
  GradedElem graded(const GradedRingSpec& spec, long weight, long terms = 3, long maxfactors = 3) {
    GradedElem out;
    for (int tries = 0; tries < 200 && static_cast<long>(out.size()) < terms; ++tries) {
      Monomial m;
      long w = 0;
      long nf = integer(0, maxfactors);
      for (long f = 0; f < nf; ++f) {
        int g = static_cast<int>(integer(0, static_cast<long>(spec.size()) - 1));
        int j = static_cast<int>(integer(0, 2));
        int e = 1;
        if (spec[g].invertible && integer(0, 2) == 0) {
          j = 0;
          e = -1;
        }
        m = mono_mul(m, Monomial{{g, j, e}});
        w += e * (spec[g].weight + 2L * j);
      }
      // top up the weight with invertible weight-w0 generators, if there are any
      long diff = weight - w;
      for (size_t g = 0; g < spec.size() && diff != 0; ++g) {
        long gw = spec[g].weight;
        if (!spec[g].invertible || gw == 0 || diff % gw != 0) continue;
        m = mono_mul(m, Monomial{{static_cast<int>(g), 0, static_cast<int>(diff / gw)}});
        diff = 0;
      }
      if (diff != 0) continue;
      out.add_term(m, nonzero_rational());
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace pdo

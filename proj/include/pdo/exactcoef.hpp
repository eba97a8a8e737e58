#pragma once

#include <numeric>
#include <vector>

#include "rat.hpp"

namespace pdo {

// y^i f = sum_u c_i(u) delta^u(f) y^{i+2u}
inline Rat comm_coeff_C(long i, long u) {
  Rat r = 1;
  for (long j = 0; j < u; ++j) {
    r *= i + 2 * j;
    r /= j + 1;
    if (r == 0) break;
  }
  return r;
}

// x^m f = sum_u b_m(u) d^u(f) x^{m+u}
inline Rat comm_coeff_B(long m, long u) { return binomial(m + u - 1, u); }

inline Rat omega(long k, long u) {
  Rat r = 1;
  for (long i = 0; i < u; ++i) {
    r *= Int(k + 2 * i) * (k + 2 * i + 2);
    r /= 4 * (i + 1);
    if (r == 0) break;
  }
  return r;
}

inline Rat rho(long u) {
  if (u < 1) throw error(errc::invalid_argument, "rho needs u >= 1");
  Int num = factorial(2 * u - 1) * factorial(2 * u - 2);
  Int f = factorial(u - 1);
  Int den = f * f * f;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 4 * (u - 1));
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// alpha_m(n): coefficient of f^{(n)} y^{m+2n} in psi_m(f)
inline Rat lift_coeff(long m, long n) {
  if (m < 0 && (-m) % 2 == 1) throw error(errc::negative_odd_weight, "no lift at weight " + std::to_string(m));
  if (n < 0) throw error(errc::invalid_argument, "negative index");
  if (m == 0) return n == 0 ? Rat(1) : Rat(0);
  Rat r = 1;
  for (long i = 0; i < n; ++i) {
    Int num = Int(m + 2 * i) * (m + 2 * i + 2);
    if (num == 0) return Rat(0);
    r *= num;
    r /= -4 * (i + 1) * (m + i);
  }
  return r;
}

enum class gamma_method { A1, A2 };

// gamma_i(t_1..t_k) of the u^k peeling formula
inline Rat gamma_tuple(long k, long i, const std::vector<long>& t, gamma_method method) {
  if (k < 1 || static_cast<long>(t.size()) != k)
    throw error(errc::invalid_argument, "gamma_tuple needs k >= 1 entries");
  long sum = 0;
  for (long tj : t) {
    if (tj < 0) throw error(errc::invalid_argument, "negative tuple entry");
    sum += tj;
  }
  if (sum != i) throw error(errc::invalid_argument, "tuple does not sum to i");

  if (method == gamma_method::A2) {
    // beta_r = [X^r] prod_j sum_{b<=t_j} C(t_j+1, b) X^b
    std::vector<Int> beta{1};
    for (long tj : t) {
      std::vector<Int> next(beta.size() + tj, 0);
      for (size_t a = 0; a < beta.size(); ++a)
        for (long b = 0; b <= tj; ++b) next[a + b] += beta[a] * binomial_int(tj + 1, b);
      beta = std::move(next);
    }
    Rat total = 0;
    for (long r = 0; r <= i; ++r) {
      Rat term = ratio(factorial(2 * k + 2 * i - 2 - r), factorial(k + i - 1 - r));
      term *= beta[r];
      if (r % 2) total -= term; else total += term;
    }
    total.canonicalize();
    return total;
  }

  if (k < 2) throw error(errc::edge_case_a1, "method A1 needs k >= 2");
  // sum over a in prod {0, t_j+1}
  Rat total = 0;
  long n = k + i - 1;
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    long asum = 0;
    long sign = 1;
    for (long j = 0; j < k; ++j) {
      if (mask >> j & 1) asum += t[j] + 1;
      else if (t[j] % 2) sign = -sign;
    }
    if (asum > n) continue;
    total += sign * binomial(k + i - 2, asum - 1);
  }
  return total * factorial(n);
}

// all k-tuples of nonnegative integers summing to n, lexicographic
inline std::vector<std::vector<long>> compositions(long n, long k) {
  std::vector<std::vector<long>> out;
  if (k == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<long> cur(k, 0);
  auto rec = [&](auto&& self, long pos, long left) -> void {
    if (pos == k - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (long v = left; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace pdo

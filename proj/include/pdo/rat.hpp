#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace pdo {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long p, long q = 1) {
  if (q == 0) throw error(errc::division_by_zero, "zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

// mpq_class(num, den) does not canonicalize; every quotient goes through here
inline Rat ratio(const Int& num, const Int& den) {
  if (den == 0) throw error(errc::division_by_zero, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// "p/q" with q > 0, always with the slash.
inline std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rat(std::string_view s) {
  std::string t(s);
  auto slash = t.find('/');
  Int num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = Int(t, 10);
    } else {
      num = Int(t.substr(0, slash), 10);
      den = Int(t.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw error(errc::invalid_argument, "not a rational: '" + t + "'");
  }
  if (den == 0) throw error(errc::division_by_zero, "zero denominator in '" + t + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace detail {

// Factorial table shared by all threads, grown under a lock.
class factorial_table {
 public:
  Int get(long n) {
    std::lock_guard lock(mu_);
    while (static_cast<long>(tab_.size()) <= n) {
      Int next = tab_.back() * static_cast<unsigned long>(tab_.size());
      tab_.push_back(next);
    }
    return tab_[n];
  }

 private:
  std::mutex mu_;
  std::vector<Int> tab_{Int(1)};
};

inline factorial_table& factorials() {
  static factorial_table t;
  return t;
}

}  // namespace detail

inline Int factorial(long n) {
  if (n < 0) throw error(errc::invalid_argument, "factorial of negative " + std::to_string(n));
  return detail::factorials().get(n);
}

// 1/n!, with the usual convention 1/n! = 0 for negative n.
inline Rat inv_factorial(long n) {
  if (n < 0) return Rat(0);
  return ratio(1, factorial(n));
}

// a(a-1)...(a-b+1)
inline Int falling(long a, long b) {
  Int p = 1;
  for (long i = 0; i < b; ++i) p *= a - i;
  return p;
}

// Generalized binomial C(a,b) for integer a and b; zero when b < 0.
inline Rat binomial(long a, long b) {
  if (b < 0) return Rat(0);
  if (a >= 0 && b > a) return Rat(0);
  return ratio(falling(a, b), factorial(b));
}

inline Int binomial_int(long a, long b) {
  Rat r = binomial(a, b);
  return r.get_num();
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw error(errc::division_by_zero, "0 to a negative power");
    return rat_pow(Rat(1) / base, -e);
  }
  Rat r = 1;
  Rat b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline Rat sign_pow(long n) { return (n % 2 == 0) ? Rat(1) : Rat(-1); }

}  // namespace pdo

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace conic {

// All invariant values are exact integers; intermediate products exceed
// 64 bits already for moderate inputs, so everything arithmetic-heavy
// goes through an arbitrary-precision type.
using Int = boost::multiprecision::cpp_int;

inline Int factorial(long long n) {
  Int r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

// n!! with the empty products (-1)!! = 0!! = 1.
inline Int double_factorial(long long n) {
  Int r = 1;
  for (long long i = n; i >= 2; i -= 2) r *= i;
  return r;
}

inline Int binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

// n! / (p_1! ... p_m! (n - sum p_i)!); zero when any part is negative
// or the parts overfill n.
inline Int multinomial(long long n, const std::vector<long long>& parts) {
  long long used = 0;
  for (long long p : parts) {
    if (p < 0) return 0;
    used += p;
  }
  if (n < 0 || used > n) return 0;
  Int r = 1;
  long long rest = n;
  for (long long p : parts) {
    r *= binom(rest, p);
    rest -= p;
  }
  return r;
}

inline Int pow_int(Int base, long long e) {
  Int r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline std::string to_string(const Int& v) { return v.str(); }

}  // namespace conic

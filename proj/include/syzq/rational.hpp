// SPDX-FileCopyrightText: 2026 The syzq authors
// SPDX-License-Identifier: MIT
//
// Exact rational arithmetic on 64-bit numerator/denominator pairs.
//
// Polytope combinatorics (vertex solving, lattice-point membership, chart
// matrices) must be exact: a vertex that is off by one ulp can flip a facet
// from active to inactive.  All quantities appearing there are tiny (matrix
// entries and offsets of magnitude ≤ a few dozen, dimensions ≤ 4), so 64-bit
// rationals with 128-bit intermediates are ample; overflow still raises
// rather than wrapping.

#ifndef SYZQ_RATIONAL_HPP
#define SYZQ_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "syzq/errors.hpp"

namespace syzq {

struct rat {
  // Invariant: den > 0 and gcd(|num|, den) == 1.
  std::int64_t num = 0;
  std::int64_t den = 1;

  rat() = default;
  rat(std::int64_t integer) : num(integer), den(1) {}  // NOLINT(implicit)
  rat(std::int64_t n, std::int64_t d) { *this = normalized(n, d); }

  static rat normalized(std::int64_t n, std::int64_t d) {
    if (d == 0) fail(errc::internal, "rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    rat r;
    r.num = g ? n / g : 0;
    r.den = g ? d / g : 1;
    return r;
  }

  static rat from_i128(__int128 n, __int128 d) {
    if (d == 0) fail(errc::internal, "rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    const __int128 g = gcd128(n < 0 ? -n : n, d);
    n /= g ? g : 1;
    d /= g ? g : 1;
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      fail(errc::internal, "rational overflow");
    rat r;
    r.num = static_cast<std::int64_t>(n);
    r.den = static_cast<std::int64_t>(d);
    return r;
  }

  friend rat operator+(const rat& a, const rat& b) {
    return from_i128(static_cast<__int128>(a.num) * b.den +
                         static_cast<__int128>(b.num) * a.den,
                     static_cast<__int128>(a.den) * b.den);
  }
  friend rat operator-(const rat& a, const rat& b) {
    return from_i128(static_cast<__int128>(a.num) * b.den -
                         static_cast<__int128>(b.num) * a.den,
                     static_cast<__int128>(a.den) * b.den);
  }
  friend rat operator*(const rat& a, const rat& b) {
    return from_i128(static_cast<__int128>(a.num) * b.num,
                     static_cast<__int128>(a.den) * b.den);
  }
  friend rat operator/(const rat& a, const rat& b) {
    if (b.num == 0) fail(errc::internal, "rational division by zero");
    return from_i128(static_cast<__int128>(a.num) * b.den,
                     static_cast<__int128>(a.den) * b.num);
  }
  rat operator-() const { rat r; r.num = -num; r.den = den; return r; }

  friend bool operator==(const rat& a, const rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const rat& a, const rat& b) { return !(a == b); }
  friend bool operator<(const rat& a, const rat& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const rat& a, const rat& b) { return !(b < a); }
  friend bool operator>(const rat& a, const rat& b) { return b < a; }
  friend bool operator>=(const rat& a, const rat& b) { return !(a < b); }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }

  /// Largest integer ≤ value (exact).
  std::int64_t floor() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
  }
  /// Smallest integer ≥ value (exact).
  std::int64_t ceil() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
  }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }
};

}  // namespace syzq

#endif  // SYZQ_RATIONAL_HPP

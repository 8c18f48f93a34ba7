#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "trackcube/error.hpp"

namespace trackcube {

// Exact rational over int64 with __int128 intermediates. Crossing-point
// coordinates are i/(c+1) with small c, so magnitudes stay tiny; overflow
// checks are still in place for safety.
struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n) : num(n), den(1) {}
  Frac(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) fail(errc::internal, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static long long clamp128(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) fail(errc::internal, "rational overflow");
    return (long long)v;
  }

  static Frac from128(__int128 n, __int128 d) {
    if (d == 0) fail(errc::internal, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    Frac f;
    f.num = clamp128(n);
    f.den = clamp128(d);
    return f;
  }

  Frac operator+(const Frac& o) const {
    return from128((__int128)num * o.den + (__int128)o.num * den, (__int128)den * o.den);
  }
  Frac operator-(const Frac& o) const {
    return from128((__int128)num * o.den - (__int128)o.num * den, (__int128)den * o.den);
  }
  Frac operator*(const Frac& o) const {
    return from128((__int128)num * o.num, (__int128)den * o.den);
  }
  Frac operator/(const Frac& o) const {
    if (o.num == 0) fail(errc::internal, "division by zero");
    return from128((__int128)num * o.den, (__int128)den * o.num);
  }
  Frac operator-() const {
    Frac f;
    f.num = -num;
    f.den = den;
    return f;
  }

  int cmp(const Frac& o) const {
    __int128 l = (__int128)num * o.den, r = (__int128)o.num * den;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  bool operator<(const Frac& o) const { return cmp(o) < 0; }
  bool operator>(const Frac& o) const { return cmp(o) > 0; }
  bool operator<=(const Frac& o) const { return cmp(o) <= 0; }
  bool operator>=(const Frac& o) const { return cmp(o) >= 0; }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Frac& o) const { return !(*this == o); }

  int sign() const { return num < 0 ? -1 : (num > 0 ? 1 : 0); }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

struct Pt {
  Frac x, y;
  bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Pt& o) const { return !(*this == o); }
  bool operator<(const Pt& o) const { return x != o.x ? x < o.x : y < o.y; }
  Pt operator-(const Pt& o) const { return {x - o.x, y - o.y}; }
};

inline Frac cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
inline Frac dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }

// sign of the oriented area of (a,b,c)
inline int orient(const Pt& a, const Pt& b, const Pt& c) { return cross(b - a, c - a).sign(); }

// Proper interior intersection of segments ab and cd (endpoints excluded).
// Inputs here never overlap collinearly: distinct chords of a triangle lie on
// distinct lines.
bool segments_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d);
Pt line_intersection(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

} // namespace trackcube

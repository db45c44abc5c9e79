#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "indec/bigint.hpp"

namespace indec {

// Closed interval with exact rational endpoints.
struct RatInterval {
  Rat lo;
  Rat hi;

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool positive() const { return lo > 0; }
  bool negative() const { return hi < 0; }
  bool sign_definite() const { return positive() || negative(); }
};

inline RatInterval operator+(const RatInterval& x, const RatInterval& y) { return {x.lo + y.lo, x.hi + y.hi}; }
inline RatInterval operator-(const RatInterval& x, const RatInterval& y) { return {x.lo - y.hi, x.hi - y.lo}; }
inline RatInterval operator-(const RatInterval& x) { return {-x.hi, -x.lo}; }

inline RatInterval operator*(const RatInterval& x, const RatInterval& y) {
  Rat p[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

inline RatInterval operator*(const Rat& s, const RatInterval& x) {
  return s >= 0 ? RatInterval{s * x.lo, s * x.hi} : RatInterval{s * x.hi, s * x.lo};
}

// Caller guarantees 0 is not in y.
inline RatInterval operator/(const RatInterval& x, const RatInterval& y) {
  return x * RatInterval{1 / y.hi, 1 / y.lo};
}

inline RatInterval point(const Rat& x) { return {x, x}; }

// Interval of doubles with outward rounding: every operation widens its
// round-to-nearest result by one ulp on each side, which encloses the exact
// real result.
struct DInterval {
  double lo = 0.0;
  double hi = 0.0;

  static double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
  static double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

  static DInterval exact(double x) { return {x, x}; }
  static DInterval widen(double lo, double hi) { return {down(lo), up(hi)}; }

  static DInterval from(const RatInterval& r) {
    return {down(down(r.lo.get_d())), up(up(r.hi.get_d()))};
  }
  static DInterval from(const Int& x) {
    const double d = x.get_d();
    return {down(d), up(d)};
  }

  bool contains_zero() const { return lo <= 0.0 && hi >= 0.0; }
};

inline DInterval operator+(const DInterval& x, const DInterval& y) { return DInterval::widen(x.lo + y.lo, x.hi + y.hi); }
inline DInterval operator-(const DInterval& x, const DInterval& y) { return DInterval::widen(x.lo - y.hi, x.hi - y.lo); }
inline DInterval operator-(const DInterval& x) { return {-x.hi, -x.lo}; }

inline DInterval operator*(const DInterval& x, const DInterval& y) {
  const double p0 = x.lo * y.lo, p1 = x.lo * y.hi, p2 = x.hi * y.lo, p3 = x.hi * y.hi;
  return DInterval::widen(std::min({p0, p1, p2, p3}), std::max({p0, p1, p2, p3}));
}

inline DInterval operator*(double s, const DInterval& x) {
  return s >= 0 ? DInterval::widen(s * x.lo, s * x.hi) : DInterval::widen(s * x.hi, s * x.lo);
}

inline DInterval operator/(const DInterval& x, const DInterval& y) {
  const double p0 = x.lo / y.lo, p1 = x.lo / y.hi, p2 = x.hi / y.lo, p3 = x.hi / y.hi;
  return DInterval::widen(std::min({p0, p1, p2, p3}), std::max({p0, p1, p2, p3}));
}

}  // namespace indec

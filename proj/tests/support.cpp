#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace testing_support {

std::mt19937_64& rng() {
  static std::mt19937_64 g(20240917);
  return g;
}

long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

OrderElement random_element(const Field& f, long bound) {
  return OrderElement(f, rand_int(-bound, bound), rand_int(-bound, bound), rand_int(-bound, bound));
}

std::array<long double, 3> numeric_roots(const indec::FieldSpec& f) {
  const long double b = f.c2.get_d(), c = f.c1.get_d(), d = f.c0.get_d();
  // depressed cubic t^3 + p t + q with x = t - b/3
  const long double p = c - b * b / 3;
  const long double q = 2 * b * b * b / 27 - b * c / 3 + d;
  const long double m = 2 * std::sqrt(-p / 3);
  const long double theta = std::acos(3 * q / (p * m)) / 3;
  std::array<long double, 3> r;
  for (int k = 0; k < 3; ++k) r[k] = m * std::cos(theta - 2 * std::numbers::pi_v<long double> * k / 3) - b / 3;
  std::sort(r.begin(), r.end(), std::greater<>());
  if (f.family == indec::Family::SimplestCubic) std::swap(r[1], r[2]);
  return r;
}

std::array<long double, 3> numeric_embed(const OrderElement& x) {
  const auto r = numeric_roots(*x.field());
  std::array<long double, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = x[0].get_d() + x[1].get_d() * r[i] + x[2].get_d() * r[i] * r[i];
  return out;
}

}  // namespace testing_support

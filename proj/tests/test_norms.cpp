#include <cmath>
#include <map>

#include "doctest.h"
#include "indec/factor.hpp"
#include "indec/ideal.hpp"
#include "indec/norms.hpp"
#include "support.hpp"

using namespace indec;
using testing_support::random_element;

namespace {

// Published squarefree-norm counts.
const std::map<long, long> kSq = {
    {-1, 2},   {0, 2},    {1, 5},    {2, 8},    {4, 17},   {6, 22},   {7, 38},   {8, 47},   {9, 46},
    {10, 68},  {11, 59},  {13, 101}, {14, 122}, {15, 118}, {16, 110}, {17, 158}, {18, 166}, {19, 209},
    {20, 224}, {22, 272}, {23, 272}, {24, 265}, {25, 341}, {26, 275}, {27, 346}, {28, 404}, {29, 455},
    {31, 404}, {32, 539}, {33, 517}, {34, 593}, {35, 614}, {36, 496}, {37, 575}, {38, 755}, {40, 839},
    {42, 811}, {43, 983}, {44, 884}, {45, 928}, {46, 833}, {47, 1157}, {49, 1277}, {50, 1166}};

bool throws(ErrorKind k, auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == k;
  }
  return false;
}

}  // namespace

TEST_SUITE("norms") {
  TEST_CASE("sum norm") {
    for (long a : {-1L, 0L, 3L, 7L, 50L}) {
      auto k = make_field(Family::SimplestCubic, a);
      CHECK(sum_norm(a, 1, 0) == 1);
      CHECK(sum_norm(a, 1, 1) == 2 * a + 3);
      for (long kk = 1; kk <= 6; ++kk)
        for (long w = 0; w <= 12; ++w) {
          const Int A(a), W(w);
          if (kk == 1) CHECK(sum_norm(a, 1, w) == -W * W * W + A * W * W + (A + 3) * W + 1);
          CHECK(sum_norm(a, kk, w) == norm(OrderElement(k, 0, -w, kk)));
        }
    }
  }

  TEST_CASE("fast count") {
    for (long a : {7L, 20L, 100L}) {
      CHECK(count_fast(a, 2 * a + 2).count() == 0);
      const auto f = count_fast(a, 2 * a + 3);
      REQUIRE(f.count() == 1);
      CHECK(f.pairs[0] == SumPair{1, 1});
      CHECK(count_fast(a, 1, true).count() == 1);
    }
    CHECK(throws(ErrorKind::BoundTooLarge, [] { count_fast(7, 50); }));
    for (long a : {30L, 90L}) {
      const long X = a * a;
      CHECK(count_fast(a, X, false, Exec::Serial).pairs == count_fast(a, X, false, Exec::Parallel).pairs);
    }
  }

  TEST_CASE("ideal HNF") {
    auto k = make_field(Family::SimplestCubic, 7);
    const auto one = ideal_hnf(OrderElement::one(k));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(one.h[i][j] == (i == j ? 1 : 0));
    const auto beta = OrderElement(k, 0, -1, 1);
    CHECK(ideal_hnf(beta) != ideal_hnf(conjugate(beta)));
    const auto units = unit_generators(k);
    for (int i = 0; i < 100; ++i) {
      const auto x = random_element(k, 30);
      if (x.is_zero()) continue;
      const auto h = ideal_hnf(x);
      CHECK(h.determinant() == abs(norm(x)));
      CHECK(ideal_hnf(x * units.fundamental[0]) == h);
      CHECK(ideal_hnf(x * inverse_unit(units.fundamental[1])) == h);
    }
    CHECK(throws(ErrorKind::ZeroElement, [&] { ideal_hnf(OrderElement::integer(k, 0)); }));
  }

  TEST_CASE("exact count examples") {
    CHECK(count_exact(7, 1) == 0);
    CHECK(count_exact(7, 1, true) == 1);
    CHECK(count_exact(7, 17) == 3);
    CHECK(count_exact(40, 1600, false, Exec::Serial) == count_exact(40, 1600, false, Exec::Parallel));
  }

  TEST_CASE("exact count equals brute force") {
    for (long a : {7L, 8L, 10L, 12L}) {
      for (long X = 1; X <= a * a; ++X) {
        const auto e = count_exact(a, X);
        CHECK(e == count_bruteforce(a, X));
        const auto f = count_fast(a, X).count();
        CHECK(e >= f);
        CHECK(e <= 3 * f + 1);
      }
      CHECK(count_exact(a, a * a, true) == count_bruteforce(a, a * a, true, Exec::Parallel));
    }
    CHECK(count_bruteforce(7, 16) == 0);
    CHECK(throws(ErrorKind::GuardExceeded, [] { count_bruteforce(13, 10); }));
  }

  TEST_CASE("brute force is monotone in X") {
    std::size_t prev = 0;
    for (long X = 1; X <= 81; ++X) {
      const auto c = count_bruteforce(9, X);
      CHECK(c >= prev);
      prev = c;
    }
  }

  TEST_CASE("squarefree table") {
    for (const auto& [a, sq] : kSq) CHECK(sq_count(a) == sq);
    for (const auto& r : sq_table(-1, 50, Exec::Parallel)) {
      CHECK(r.maximal == (kSq.count(r.a) == 1));
      CHECK(r.sq <= r.records);
      if (r.a == -1 || r.a == 1) CHECK(r.sq == r.records);
    }
  }

  TEST_CASE("squarefree test") {
    CHECK(is_squarefree(Int(1)));
    CHECK(is_squarefree(Int(79)));
    CHECK_FALSE(is_squarefree(Int(63)));
    CHECK_FALSE(is_squarefree(Int(0)));
    const Int p("1000000007"), q("998244353");
    CHECK(is_squarefree(p * q));
    CHECK_FALSE(is_squarefree(p * p * 3));
    for (long n = 1; n <= 3000; ++n) {
      bool sf = true;
      for (long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) sf = false;
      CHECK(is_squarefree(Int(n)) == sf);
    }
  }

  TEST_CASE("largest norm") {
    const auto m4 = max_norm_indecomposable(4);
    Int best = norm(OrderElement(make_field(Family::SimplestCubic, 4), 1, 1, 1));
    for (const auto& p : triangle_points(4)) best = std::max(best, triangle_norm(4, p));
    CHECK(m4.norm == best);
    for (long a = 10; a <= 30; ++a) {
      const auto m = max_norm_indecomposable(a);
      REQUIRE_FALSE(m.exceptional);
      CHECK(std::abs(m.point.v - a / 3.0) + std::abs(m.point.W - a / 3.0) <= 2.0);
    }
    // max 27 / a^4 tends to 1
    double prev = 1;
    for (long a : {50L, 200L, 800L}) {
      const double r = max_norm_indecomposable(a).norm.get_d() * 27 / std::pow(double(a), 4);
      CHECK(std::abs(r - 1) < prev);
      prev = std::abs(r - 1);
    }
    CHECK(throws(ErrorKind::IllegalParameter, [] { max_norm_indecomposable(3); }));
  }

  TEST_CASE("scaling band") {
    for (double d : {0.5, 1.0}) {
      double lo = 1e300, hi = 0;
      for (long a : {50L, 100L, 200L, 400L, 800L}) {
        // floor(a^(1+d)) exactly
        const long X = d == 1.0 ? a * a : isqrt(Int(a) * a * a).get_si();
        const double r = double(count_fast(a, X).count()) / std::pow(double(a), 2 * d / 3);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      CHECK(hi / lo <= 10.0);
    }
  }
}

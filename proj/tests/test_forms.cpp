#include <algorithm>
#include <functional>

#include "doctest.h"
#include "indec/forms.hpp"
#include "indec/ideal.hpp"
#include "indec/oracle.hpp"
#include "support.hpp"

using namespace indec;
using testing_support::rand_int;
using testing_support::random_element;

namespace {

bool throws(ErrorKind k, auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == k;
  }
  return false;
}

// Root systems by brute force over multisets of components: half the
// number of roots of each irreducible system, with its rank.
long root_count_bruteforce(long R) {
  std::vector<std::pair<long, long>> comps;
  for (long n = 1; n <= R; ++n) comps.emplace_back(n, n * (n + 1) / 2);
  for (long n = 4; n <= R; ++n) comps.emplace_back(n, n * (n - 1));
  for (auto [k, v] : {std::pair<long, long>{6, 36}, {7, 63}, {8, 120}})
    if (k <= R) comps.emplace_back(k, v);
  long best = 0;
  std::function<void(std::size_t, long, long)> go = [&](std::size_t from, long left, long acc) {
    best = std::max(best, acc);
    for (std::size_t i = from; i < comps.size(); ++i)
      if (comps[i].first <= left) go(i, left - comps[i].first, acc + comps[i].second);
  };
  go(0, R, 0);
  return best;
}

OrderElement sum_of(const std::vector<DescentPart>& parts, const Field& f) {
  OrderElement s = OrderElement::integer(f, 0);
  for (const auto& p : parts) s = s + p.element;
  return s;
}

}  // namespace

TEST_SUITE("forms") {
  TEST_CASE("minimal vector table") {
    const long listed[] = {1, 3, 6, 12, 20, 36, 63, 120};
    for (long R = 1; R <= 8; ++R) {
      CHECK(M_table(R) == listed[R - 1]);
      CHECK(root_lattice_dp(R) == listed[R - 1]);
    }
    const long gap[] = {121, 123, 126, 132, 156, 182, 210};
    for (long R = 9; R <= 15; ++R) {
      CHECK(M_table(R) == gap[R - 9]);
      CHECK(root_count_bruteforce(R) == gap[R - 9]);
    }
    for (long R = 16; R <= 18; ++R) CHECK(M_table(R) == R * (R - 1));
    for (long R = 1; R <= 64; ++R) {
      CHECK(M_table(R) < 2 * R * R);
      if (R >= 16) CHECK(root_lattice_dp(R) == R * (R - 1));
    }
    CHECK(throws(ErrorKind::IllegalRank, [] { M_table(0); }));
  }

  TEST_CASE("exact square roots") {
    for (auto [fam, a] : {std::pair{Family::SimplestCubic, 7L}, {Family::Ennola, 5L}, {Family::Thomas, 3L}}) {
      const auto f = make_field(fam, a);
      for (int i = 0; i < 60; ++i) {
        const auto x = random_element(f, 50);
        const auto y = exact_sqrt(x * x);
        REQUIRE(y.has_value());
        CHECK((*y == x || *y == -x));
      }
      CHECK_FALSE(exact_sqrt(OrderElement::integer(f, 2)));
      CHECK_FALSE(exact_sqrt(-OrderElement::one(f)));
      const auto z = exact_sqrt(OrderElement::integer(f, 0));
      REQUIRE(z.has_value());
      CHECK(z->is_zero());
    }
    const auto f = make_field(Family::SimplestCubic, 7);
    const OrderElement x(f, 3, -1, 2), y(f, 1, 1, 0);
    CHECK(exact_quotient(x * y, y) == x);
    CHECK_FALSE(exact_quotient(OrderElement::integer(f, 3), OrderElement::integer(f, 2)));
  }

  TEST_CASE("squares among totally positive units") {
    for (long a = -1; a <= 8; ++a) CHECK(unit_square_classes(make_field(Family::SimplestCubic, a)).size() == 1);
    for (long a = 3; a <= 7; ++a) CHECK(unit_square_classes(make_field(Family::Ennola, a)).size() == 2);
    for (long a = 2; a <= 6; ++a) CHECK(unit_square_classes(make_field(Family::Thomas, a)).size() == 2);
  }

  TEST_CASE("diagonal universal form rank") {
    for (long a = -1; a <= 12; ++a) {
      const auto form = diagonal_universal(make_field(Family::SimplestCubic, a));
      CHECK(form.rank() == std::size_t(3 * (a * a + 3 * a + 6)));
      CHECK(form.coefficients().size() == form.rank());
    }
    CHECK(diagonal_universal(make_field(Family::SimplestCubic, 7)).rank() == 228);
    for (long a = 3; a <= 8; ++a) CHECK(diagonal_universal(make_field(Family::Ennola, a)).rank() == std::size_t(12 * a));
    // 2a unit classes, each split in two by the non-square unit rho
    for (long a = 2; a <= 6; ++a) CHECK(diagonal_universal(make_field(Family::Thomas, a)).rank() == std::size_t(24 * a));
    for (long D : {2L, 3L, 5L, 6L, 7L, 10L, 13L}) {
      const auto cf = cf_expand(D);
      CHECK(Int(diagonal_universal(cf).rank()) == kPythagorasQuadratic * quad_counts(cf).s_count);
    }
  }

  TEST_CASE("representatives are distinct modulo squares") {
    for (auto [fam, a] : {std::pair{Family::SimplestCubic, 4L}, {Family::Ennola, 4L}, {Family::Thomas, 3L}}) {
      const auto reps = diagonal_universal(make_field(fam, a)).representatives;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        CHECK(is_totally_positive(reps[i]));
        CHECK_FALSE(decompose(reps[i]));
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
          const auto q = exact_quotient(reps[i], reps[j]);
          if (q && abs(norm(*q)) == 1) CHECK_FALSE(exact_sqrt(*q));
        }
      }
    }
  }

  TEST_CASE("rank report") {
    const auto r7 = rank_report(make_field(Family::SimplestCubic, 7));
    CHECK(r7.n == 39);
    CHECK(r7.upper_diag == 228);
    CHECK(r7.lower_classical == 13);
    CHECK(r7.m == Int(9));
    CHECK(r7.lower_diag == Int(2));
    CHECK(r7.lower_nonclassical.coefficient == Rat(1, 6));
    CHECK(r7.lower_nonclassical.radicand == 78);
    CHECK(r7.lower_nonclassical.ceiling == 2);

    for (long a = -1; a <= 12; ++a) {
      const auto r = rank_report(make_field(Family::SimplestCubic, a));
      REQUIRE(r.enumerated);
      CHECK(r.n == Int((a * a + 3 * a + 8) / 2));
      CHECK(r.s_count == Int((a * a + 3 * a + 6) / 2));
      CHECK(r.m == Int(9));
      if (a >= 3) CHECK(r.lower_classical >= 4);
    }
    const auto r20 = rank_report(make_field(Family::SimplestCubic, 20));
    CHECK(r20.n == 234);
    CHECK(r20.lower_nonclassical.coefficient == Rat(1, 6));
    const auto r21 = rank_report(make_field(Family::SimplestCubic, 21));
    CHECK(r21.n == 256);
    CHECK(r21.lower_nonclassical.coefficient == Rat(1, 3));
    CHECK(r21.lower_nonclassical.ceiling == 6);

    // upper / (n/3) = 18 (a^2+3a+6)/(a^2+3a+8), increasing to 18
    Rat prev = 0;
    for (long a : {100L, 1000L}) {
      const auto r = rank_report(make_field(Family::SimplestCubic, a));
      CHECK(r.n == Int((a * a + 3 * a + 8) / 2));
      const Rat ratio = Rat(r.upper_diag) / (Rat(r.n) / 3);
      Rat want(18 * (a * a + 3 * a + 6), a * a + 3 * a + 8);
      want.canonicalize();
      CHECK(ratio == want);
      CHECK(ratio < 18);
      CHECK(ratio > prev);
      prev = ratio;
    }
    CHECK_FALSE(rank_report(make_field(Family::SimplestCubic, 1000)).m);

    for (long a = 3; a <= 8; ++a) {
      const auto r = rank_report(make_field(Family::Ennola, a));
      CHECK(r.upper_diag == 12 * a);
      CHECK(r.m_quoted == Int(a - 1));
      CHECK(r.lower_diag_quoted == ceil_div(Int(a - 1), 6));
      // the quoted trace-two elements 1 + w rho + rho^2 are among those counted
      CHECK(r.m == Int(a + 2));
      const auto f = make_field(Family::Ennola, a);
      const auto two = elements_of_trace(family_delta(f), 2);
      for (long w = 1; w <= a - 1; ++w)
        CHECK(std::find(two.begin(), two.end(), OrderElement(f, 1, w, 1)) != two.end());
    }
    for (long a = 3; a <= 6; ++a) {
      const auto r = rank_report(make_field(Family::Thomas, a));
      CHECK(r.m == Int(a));
      CHECK(r.m_quoted == Int(a));
    }
  }

  TEST_CASE("descent into indecomposables") {
    const auto f = make_field(Family::SimplestCubic, 7);
    const auto recs = indecomposables(f);
    for (std::size_t i = 0; i < recs.size(); i += 5) {
      const auto parts = decompose_into_indecomposables(recs[i].element);
      REQUIRE(parts.size() == 1);
      CHECK(parts[0].unit == OrderElement::one(f));
    }
    const auto two = decompose_into_indecomposables(OrderElement::integer(f, 2));
    REQUIRE(two.size() == 2);
    CHECK(two[0].element == OrderElement::one(f));
    CHECK(two[1].element == OrderElement::one(f));
    // 3 + 5 rho + 2 rho^2 is not totally positive; the least constant that makes it so is 4
    CHECK_FALSE(is_totally_positive(OrderElement(f, 3, 5, 2)));
    const OrderElement alpha(f, 4, 5, 2);
    REQUIRE(is_totally_positive(alpha));
    const auto parts = decompose_into_indecomposables(alpha);
    CHECK(sum_of(parts, f) == alpha);
    for (const auto& p : parts) {
      CHECK(is_totally_positive(p.element));
      CHECK(p.unit * recs[p.record].element == p.element);
      CHECK(is_totally_positive(p.unit));
    }
    CHECK(throws(ErrorKind::OutOfDomain, [&] { decompose_into_indecomposables(OrderElement(f, 3, 5, 2)); }));
  }

  TEST_CASE("descent property on random elements") {
    for (auto [fam, a] : {std::pair{Family::SimplestCubic, 3L}, {Family::Ennola, 4L}, {Family::Thomas, 3L}}) {
      const auto f = make_field(fam, a);
      const auto delta = family_delta(f);
      int done = 0;
      while (done < 25) {
        const auto x = random_element(f, 12);
        if (!is_totally_positive(x)) continue;
        ++done;
        const auto parts = decompose_into_indecomposables(x);
        CHECK(sum_of(parts, f) == x);
        Int phi = 0;
        for (const auto& p : parts) {
          CHECK(trace_pairing(delta, p.element) >= 1);
          phi += trace_pairing(delta, p.element);
        }
        CHECK(phi == trace_pairing(delta, x));
      }
    }
  }

  TEST_CASE("sums of squares") {
    const auto f = make_field(Family::SimplestCubic, 1);
    for (long n : {1L, 2L, 3L, 7L, 15L}) {
      const auto s = sum_of_squares(OrderElement::integer(f, n), 6);
      REQUIRE(s.has_value());
      OrderElement sum = OrderElement::integer(f, 0);
      for (const auto& x : *s) sum = sum + x * x;
      CHECK(sum == OrderElement::integer(f, n));
    }
    CHECK_FALSE(sum_of_squares(OrderElement::integer(f, 2), 1));
    CHECK_FALSE(sum_of_squares(OrderElement::integer(f, -1), 6));
    for (int i = 0; i < 20; ++i) {
      const auto x = random_element(f, 4), y = random_element(f, 4);
      const auto beta = x * x + y * y;
      if (beta.is_zero()) continue;
      CHECK(sum_of_squares(beta, 2).has_value());
    }
  }

  TEST_CASE("universality windows") {
    const auto w1 = verify_universality_window(make_field(Family::SimplestCubic, 1), 6);
    CHECK(w1.checked > 0);
    CHECK(w1.failures.empty());
    const auto w2 = verify_universality_window(make_field(Family::SimplestCubic, 2), 4, Exec::Parallel);
    CHECK(w2.checked > 0);
    CHECK(w2.failures.empty());
    for (auto [fam, a] : {std::pair{Family::Ennola, 3L}, {Family::Thomas, 3L}}) {
      const auto w = verify_universality_window(make_field(fam, a), 4, Exec::Parallel);
      CHECK(w.failures.empty());
    }
    const auto s = verify_universality_window(make_field(Family::SimplestCubic, -1), 5, Exec::Serial);
    const auto p = verify_universality_window(make_field(Family::SimplestCubic, -1), 5, Exec::Parallel);
    CHECK(s.checked == p.checked);
    CHECK(s.max_parts == p.max_parts);
    CHECK(throws(ErrorKind::GuardExceeded, [] { verify_universality_window(make_field(Family::SimplestCubic, 9), 2); }));
    CHECK(throws(ErrorKind::GuardExceeded, [] { verify_universality_window(make_field(Family::SimplestCubic, 1), 13); }));
  }

  TEST_CASE("representation by the diagonal form") {
    const auto f = make_field(Family::SimplestCubic, 2);
    auto form = diagonal_universal(f);
    for (long n = 1; n <= 12; ++n) {
      const auto r = represent(form, OrderElement::integer(f, n));
      CHECK(r.regrouped == 0);
    }
    // with multiplicity 2, four copies of 1 must be rewritten as 2^2
    form.multiplicity = 2;
    const auto coeffs = form.coefficients();
    const auto r = represent(form, OrderElement::integer(f, 4));
    CHECK(r.regrouped == 1);
    REQUIRE(r.terms.size() == 1);
    CHECK(coeffs[r.terms[0].coefficient] == OrderElement::one(f));
    CHECK(r.terms[0].x == OrderElement::integer(f, 2));
    // 5 ones would need five squares of 1 or 2^2 + 1: two terms suffice
    const auto r5 = represent(form, OrderElement::integer(f, 5));
    OrderElement sum = OrderElement::integer(f, 0);
    for (const auto& t : r5.terms) sum = sum + coeffs[t.coefficient] * t.x * t.x;
    CHECK(sum == OrderElement::integer(f, 5));
    // 3 = 1 + 1 + 1 is not a sum of two squares in Z[rho]
    CHECK(throws(ErrorKind::CertificateFailure, [&] { represent(form, OrderElement::integer(f, 3)); }));
  }
}

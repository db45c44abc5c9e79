#include <optional>

#include "doctest.h"
#include "indec/families.hpp"
#include "indec/oracle.hpp"
#include "support.hpp"

using namespace indec;
using testing_support::rand_int;
using testing_support::random_element;

namespace {

Field simplest(long a) { return make_field(Family::SimplestCubic, a); }

OrderElement random_totally_positive(const Field& k, long bound) {
  for (;;) {
    const auto x = random_element(k, bound), y = random_element(k, bound);
    const auto s = x * x + y * y;
    if (!s.is_zero()) return s;
  }
}

// Plain scan of the whole search box, no pruning.
std::optional<OrderElement> naive_decompose(const OrderElement& alpha) {
  const Field& k = alpha.field();
  Region r;
  r.model = cubic_model(k);
  r.lower.assign(3, RVec{0, 0, 0});
  r.upper.assign(3, RVec{Rat(alpha[0]), Rat(alpha[1]), Rat(alpha[2])});
  const CoordBox b = search_box(r);
  for (Int x = b.lo[0]; x <= b.hi[0]; ++x)
    for (Int y = b.lo[1]; y <= b.hi[1]; ++y)
      for (Int z = b.lo[2]; z <= b.hi[2]; ++z) {
        const OrderElement beta(k, x, y, z);
        if (beta.is_zero() || beta == alpha) continue;
        if (is_totally_positive(beta) && is_totally_positive(alpha - beta)) return beta;
      }
  return std::nullopt;
}

// Exact test of N(a+b) >= (N(a)^(1/3) + N(b)^(1/3))^3 through integer cube
// roots at scale 2^K. Returns +1 holds, -1 violated, 0 undecided.
int superadditive(const Int& nab, const Int& na, const Int& nb) {
  for (unsigned k = 32; k <= 512; k *= 2) {
    const Int scale = Int(1) << k;
    const Int s3 = scale * scale * scale;
    const Int ca = icbrt(na * s3), cb = icbrt(nb * s3);
    const Int up = ca + cb + 2, lo = ca + cb;
    if (up * up * up <= nab * s3) return 1;
    if (lo * lo * lo > nab * s3) return -1;
  }
  return 0;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("decompose small examples") {
    for (long a : {-1L, 0L, 3L, 7L}) {
      auto k = simplest(a);
      const auto two = OrderElement::integer(k, 2);
      const auto d = decompose(two);
      REQUIRE(d);
      CHECK(d->beta == OrderElement::one(k));
      CHECK(d->gamma == OrderElement::one(k));
      CHECK_FALSE(decompose(OrderElement::one(k)));
    }
  }

  TEST_CASE("exceptional element is indecomposable") {
    for (long a : {-1L, 0L, 1L, 2L, 4L, 7L}) {
      auto k = simplest(a);
      CHECK_FALSE(decompose(OrderElement(k, 1, 1, 1)));
    }
  }

  TEST_CASE("shifted triangle elements decompose") {
    for (long a : {0L, 1L, 4L, 7L}) {
      auto k = simplest(a);
      for (long v = 0; v <= a; ++v)
        for (long w = (v + 1) * (a + 1) + 1; w <= (v + 1) * (a + 2); ++w) {
          const OrderElement x(k, -v, -w, v + 2);
          const auto d = decompose(x);
          REQUIRE(d);
          CHECK(d->beta + d->gamma == x);
          const auto [p, q] = shifted_triangle_decomposition(k, v, w);
          CHECK(p + q == x);
        }
    }
  }

  TEST_CASE("decompose agrees with an unpruned scan") {
    for (long a : {-1L, 1L, 4L}) {
      auto k = simplest(a);
      for (int i = 0; i < 40; ++i) {
        const auto x = random_totally_positive(k, 3);
        const auto d = decompose(x);
        const auto n = naive_decompose(x);
        REQUIRE(d.has_value() == n.has_value());
        if (d) CHECK(d->beta == *n);
      }
    }
  }

  TEST_CASE("serial and parallel searches agree") {
    for (long a : {2L, 7L}) {
      auto k = simplest(a);
      for (int i = 0; i < 30; ++i) {
        const auto x = random_totally_positive(k, 4);
        const auto s = decompose(x, Exec::Serial), p = decompose(x, Exec::Parallel);
        REQUIRE(s.has_value() == p.has_value());
        if (s) CHECK(s->beta == p->beta);
        const auto ts = trace_slice(x, 2, Exec::Serial), tp = trace_slice(x, 2, Exec::Parallel);
        REQUIRE(ts.size() == tp.size());
        for (size_t j = 0; j < ts.size(); ++j) CHECK(ts[j].numerator() == tp[j].numerator());
      }
    }
    auto k = simplest(4);
    CHECK(indecomposables_by_search(k, Exec::Serial) == indecomposables_by_search(k, Exec::Parallel));
  }

  TEST_CASE("min_trace examples") {
    for (long a : {-1L, 0L, 1L, 2L, 4L, 7L}) {
      auto k = simplest(a);
      const auto r = min_trace(OrderElement(k, 1, 1, 1));
      REQUIRE(r);
      CHECK(r->t == 2);
      CHECK(trace_pairing(r->witness, OrderElement(k, 1, 1, 1)) == 2);
      CHECK(is_totally_positive_codiff(r->witness));
    }
    auto k7 = simplest(7);
    for (const auto& p : triangle_points(7)) {
      const auto r = min_trace(triangle_element(k7, p));
      REQUIRE(r);
      CHECK(r->t == 1);
    }
    auto t3 = make_field(Family::Thomas, 3);
    const auto r = min_trace(OrderElement(t3, 0, 11, -2));
    REQUIRE(r);
    CHECK(r->t == 3);
    CHECK_FALSE(min_trace(OrderElement(t3, 0, 11, -2), 2));
  }

  TEST_CASE("trace slice members verify") {
    auto k = simplest(3);
    for (int i = 0; i < 20; ++i) {
      const auto x = random_totally_positive(k, 3);
      const long t = rand_int(1, 4);
      for (const auto& d : trace_slice(x, t)) {
        CHECK(trace_pairing(d, x) == t);
        CHECK(is_totally_positive_codiff(d));
      }
    }
  }

  TEST_CASE("search box") {
    auto k = simplest(7);
    Region r;
    r.model = cubic_model(k);
    r.lower.resize(3);
    r.upper.resize(3);
    try {
      search_box(r);
      FAIL("expected UnboundedRegion");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnboundedRegion);
    }
    r.lower.assign(3, RVec{0, 0, 0});
    r.upper.assign(3, RVec{2, 0, 0});
    const auto b = search_box(r);
    // 0 < beta < 2 has exactly the solution beta = 1 in any order
    CHECK(b.lo[0] <= 1);
    CHECK(b.hi[0] >= 1);
    size_t hits = 0;
    for (Int x = b.lo[0]; x <= b.hi[0]; ++x)
      for (Int y = b.lo[1]; y <= b.hi[1]; ++y)
        for (Int z = b.lo[2]; z <= b.hi[2]; ++z) {
          const OrderElement beta(k, x, y, z);
          const OrderElement rest = OrderElement::integer(k, 2) - beta;
          if (!beta.is_zero() && !rest.is_zero() && is_totally_positive(beta) && is_totally_positive(rest))
            ++hits;
        }
    CHECK(hits == 1);
  }

  TEST_CASE("superadditivity of the cube root of the norm") {
    for (long a : {-1L, 2L, 7L, 40L}) {
      auto k = simplest(a);
      for (int i = 0; i < 2500; ++i) {
        const auto x = random_totally_positive(k, 20), y = random_totally_positive(k, 20);
        CHECK(superadditive(norm(x + y), norm(x), norm(y)) == 1);
      }
    }
  }

  TEST_CASE("norm of a sum") {
    for (long a : {-1L, 0L, 5L, 33L}) {
      auto k = simplest(a);
      for (int i = 0; i < 2500; ++i) {
        const auto x = random_element(k, 100), y = random_element(k, 100);
        const auto x1 = conjugate(x, 1), y1 = conjugate(y, 1), y2 = conjugate(y, 2);
        CHECK(norm(x + y) == norm(x) + norm(y) + trace(x * y1 * y2) + trace(x * x1 * y2));
      }
    }
  }
}

#include <cmath>
#include <set>

#include "doctest.h"
#include "indec/quadratic.hpp"

using namespace indec;

namespace {

const long kDs[] = {2, 3, 5, 6, 7, 10, 13};

std::set<QuadHNF> classes(const QuadField& f, const std::vector<QuadElement>& xs, const Int& bound) {
  std::set<QuadHNF> out;
  for (const auto& x : xs)
    if (norm(f, x) <= bound) out.insert(quad_ideal_hnf(f, x));
  return out;
}

std::set<QuadHNF> classes(const QuadField& f, const std::vector<QuadRecord>& rs) {
  std::set<QuadHNF> out;
  for (const auto& r : rs) out.insert(quad_ideal_hnf(f, r.element));
  return out;
}

// Partial quotients of xi_D by floating-point iteration; fine for a few terms.
std::vector<long> float_cf(long D, int terms) {
  long double x = D % 4 == 1 ? (std::sqrt((long double)D) - 1) / 2 : std::sqrt((long double)D);
  std::vector<long> out;
  for (int i = 0; i < terms; ++i) {
    const long double u = std::floor(x);
    out.push_back(static_cast<long>(u));
    x = 1 / (x - u);
  }
  return out;
}

bool throws(ErrorKind k, auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == k;
  }
  return false;
}

}  // namespace

TEST_SUITE("quadratic") {
  TEST_CASE("field construction") {
    CHECK(throws(ErrorKind::NotSquarefree, [] { make_quad_field(12); }));
    CHECK(throws(ErrorKind::IllegalParameter, [] { make_quad_field(1); }));
    CHECK(make_quad_field(13).one_mod_4());
    CHECK(make_quad_field(13).discriminant() == 13);
    CHECK(make_quad_field(7).discriminant() == 28);
  }

  TEST_CASE("arithmetic") {
    for (long D : kDs) {
      const auto f = make_quad_field(D);
      for (long x = -4; x <= 4; ++x)
        for (long y = -4; y <= 4; ++y) {
          const QuadElement a{x, y};
          CHECK(mul(f, a, conjugate(f, a)) == QuadElement{norm(f, a), 0});
          CHECK(add(a, conjugate(f, a)) == QuadElement{trace(f, a), 0});
          const long double w = f.one_mod_4() ? (1 + std::sqrt((long double)D)) / 2 : std::sqrt((long double)D);
          const long double wc = f.one_mod_4() ? (1 - std::sqrt((long double)D)) / 2 : -std::sqrt((long double)D);
          const auto s = signature(f, a);
          if (x != 0 || y != 0) {
            CHECK(s[0] == (x + y * w > 0 ? 1 : -1));
            CHECK(s[1] == (x + y * wc > 0 ? 1 : -1));
          }
        }
    }
  }

  TEST_CASE("continued fractions") {
    auto c2 = cf_expand(2);
    CHECK(c2.u0 == 1);
    REQUIRE(c2.s() == 1);
    CHECK(c2.period[0] == 2);
    for (long t : {1L, 3L, 5L, 9L, 11L, 13L}) {
      const auto cf = cf_expand(t * t + 1);
      CHECK(cf.u0 == t);
      REQUIRE(cf.s() == 1);
      CHECK(cf.period[0] == 2 * t);
    }
    for (long D : {2L, 3L, 5L, 6L, 7L, 10L, 13L, 14L, 19L, 21L, 31L, 46L, 94L}) {
      const auto cf = cf_expand(D);
      const auto fl = float_cf(D, 8);
      for (int i = 0; i < 8; ++i) CHECK(cf.u(i) == fl[i]);
      // the period is primitive
      for (long d = 1; d < cf.s(); ++d) {
        if (cf.s() % d) continue;
        bool same = true;
        for (long i = 0; i < cf.s(); ++i) same = same && cf.period[i] == cf.period[i % d];
        CHECK_FALSE(same);
      }
    }
    CHECK(throws(ErrorKind::NotSquarefree, [] { cf_expand(18); }));
  }

  TEST_CASE("convergent determinant identity over two periods") {
    for (long D : {2L, 3L, 5L, 6L, 7L, 10L, 13L, 19L, 46L, 94L}) {
      const auto cf = cf_expand(D);
      const auto c = convergents(cf, 2 * cf.s() + 1);
      for (long i = 0; i <= c.imax(); ++i)
        CHECK(c.p(i) * c.q(i - 1) - c.p(i - 1) * c.q(i) == (i % 2 == 1 ? 1 : -1));
    }
  }

  TEST_CASE("semiconvergents") {
    const auto cf = cf_expand(2);
    CHECK(semiconvergent(cf, -1, 0) == QuadElement{1, 0});
    CHECK(semiconvergent(cf, -1, 1) == QuadElement{2, 1});
    CHECK(semiconvergent(cf, 0, 0) == QuadElement{1, 1});
    for (long D : kDs) {
      const auto c = cf_expand(D);
      for (long i = -1; i < 2 * c.s(); ++i) {
        CHECK(semiconvergent(c, i, 0) == convergent(c, i));
        CHECK(semiconvergent(c, i, c.u(i + 2)) == convergent(c, i + 2));
      }
    }
    CHECK(throws(ErrorKind::IndexOutOfRange, [&] { semiconvergent(cf, -2, 0); }));
    CHECK(throws(ErrorKind::IndexOutOfRange, [&] { semiconvergent(cf, 0, 3); }));
  }

  TEST_CASE("trace-one certificates") {
    for (long D : kDs) {
      const auto cf = cf_expand(D);
      const auto& f = cf.field;
      for (long i = -1; i < 4 * cf.s(); i += 2) {
        const auto t = trace_one_delta(cf, i);
        CHECK(is_totally_positive(f, t.delta));
        for (Int r = 0; r <= cf.u(i + 2); ++r) CHECK(trace_pairing(f, t.delta, semiconvergent(cf, i, r)) == 1);
        if (f.one_mod_4()) {
          CHECK(t.rejected.size() == 1);
          CHECK(t.scaling == "-alpha'_{i+1} / sqrt(disc)");
        } else {
          CHECK(t.rejected.empty());
        }
      }
    }
    CHECK(throws(ErrorKind::IndexOutOfRange, [] { trace_one_delta(cf_expand(2), 0); }));
  }

  TEST_CASE("trace pairing against the rational definition") {
    // Tr(a gamma / sqrt(disc)) computed as (a gamma - (a gamma)') / sqrt(disc) = omega-part
    for (long D : kDs) {
      const auto f = make_quad_field(D);
      for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y) {
          const QuadElement z = mul(f, QuadElement{x, y}, QuadElement{2, 1});
          // z - z' = y_z (omega - omega') = y_z sqrt(D) (1 mod 4) or 2 y_z sqrt(D)
          const QuadElement diff = sub(z, conjugate(f, z));
          if (f.one_mod_4()) CHECK(diff == QuadElement{-z.y, 2 * z.y});
          else CHECK(diff == QuadElement{0, 2 * z.y});
          CHECK(trace_pairing(f, QuadCodifferent{QuadElement{2, 1}}, QuadElement{x, y}) == z.y);
        }
    }
  }

  TEST_CASE("inventory equals the rank-2 oracle") {
    for (long D : kDs) {
      const auto cf = cf_expand(D);
      const auto& f = cf.field;
      const auto inv = indecomposables_quadratic(cf, f.discriminant());
      for (const auto& r : inv) {
        CHECK(is_totally_positive(f, r.element));
        CHECK_FALSE(quad_decompose(f, r.element));
      }
      const auto found = quad_indecomposables_by_search(cf);
      CHECK(classes(f, inv) == classes(f, found, f.discriminant()));
      // every indecomposable in the window has norm below the discriminant
      for (const auto& x : found) CHECK(norm(f, x) < f.discriminant());
      for (const Int bound : std::vector<Int>{1, 2, 3, Int(f.discriminant() / 2)}) {
        CHECK(classes(f, indecomposables_quadratic(cf, bound)) == classes(f, found, bound));
      }
      CHECK(found == quad_indecomposables_by_search(cf, Exec::Parallel));
    }
  }

  TEST_CASE("counts") {
    for (long t : {1L, 3L, 5L, 9L}) {
      const auto cf = cf_expand(t * t + 1);
      const auto c = quad_counts(cf);
      CHECK(c.n == 2 * t + 1);
      CHECK(c.s_count == 2 * t);
    }
    const auto c3 = quad_counts(cf_expand(3));
    CHECK(c3.n == 2);
    CHECK(c3.s_count == 2);
    for (long D : kDs) {
      const auto cf = cf_expand(D);
      const auto& f = cf.field;
      const auto c = quad_counts(cf);
      // classes up to totally positive units; squares have index 2 when s is even
      const auto k = classes(f, indecomposables_quadratic(cf, f.discriminant())).size();
      CHECK(c.s_count == Int(cf.s() % 2 == 0 ? 2 * k : k));
      // n elements of trace one against a single delta
      long best = -1;
      for (long i = -1; i < 2 * cf.s(); i += 2) best = std::max(best, cf.u(i + 2).get_si());
      CHECK(c.n == best + 1);
    }
    // the displayed odd-period closed forms agree only for D = 2, 3 mod 4 with s = 1
    for (long D : {2L, 10L, 26L}) {
      const auto c = quad_counts(cf_expand(D));
      CHECK(c.n == c.n_display);
      CHECK(c.s_count == c.s_count_display);
    }
    const auto c5 = quad_counts(cf_expand(5));
    CHECK(c5.s_count == 1);
    CHECK(c5.s_count_display == 0);
    const auto c74 = quad_counts(cf_expand(74));
    CHECK(c74.n == 17);
    CHECK(c74.n_display != c74.n);
  }

  TEST_CASE("ideal HNF") {
    for (long D : kDs) {
      const auto cf = cf_expand(D);
      const auto& f = cf.field;
      const auto e = convergent(cf, cf.s() - 1);
      for (long x = -5; x <= 5; ++x)
        for (long y = -5; y <= 5; ++y) {
          if (x == 0 && y == 0) continue;
          const QuadElement a{x, y};
          const auto h = quad_ideal_hnf(f, a);
          CHECK(h.h00 * h.h11 == abs(norm(f, a)));
          CHECK(h.h10 >= 0);
          CHECK(h.h10 < h.h00);
          CHECK(quad_ideal_hnf(f, mul(f, a, e)) == h);
          CHECK(quad_ideal_hnf(f, scale(-1, a)) == h);
        }
    }
  }
}

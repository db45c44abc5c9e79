#include "indec/norms.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <omp.h>

#include "indec/factor.hpp"
#include "indec/ideal.hpp"
#include "indec/oracle.hpp"

namespace indec {

namespace {

void require_window(long a, long X) {
  require(X >= 1, ErrorKind::IllegalParameter, "X must be at least 1");
  require(Int(X) <= Int(a) * a, ErrorKind::BoundTooLarge, "X exceeds a^2");
}

__int128 sum_norm128(long a, __int128 k, __int128 w) {
  return -w * w * w + a * k * w * w + a * k * k * w + 3 * k * k * w + k * k * k;
}

using HnfSet = std::set<IdealHNF>;

template <class Body>
void for_each_index(std::int64_t n, Exec exec, std::vector<HnfSet>& sets, Body&& body) {
  if (exec == Exec::Parallel) {
    const int t = thread_count();
    sets.assign(t, {});
#pragma omp parallel for schedule(dynamic, 1) num_threads(t)
    for (std::int64_t i = 0; i < n; ++i) body(i, sets[omp_get_thread_num()]);
  } else {
    sets.assign(1, {});
    for (std::int64_t i = 0; i < n; ++i) body(i, sets[0]);
  }
}

std::size_t merged_size(std::vector<HnfSet>& sets) {
  HnfSet all;
  for (auto& s : sets) all.merge(s);
  return all.size();
}

bool primitive(const OrderElement& x) { return gcd(gcd(x[0], x[1]), x[2]) == 1; }

}  // namespace

Int sum_norm(long a, const Int& k, const Int& w) {
  const Int A(a);
  return -w * w * w + A * k * w * w + A * k * k * w + 3 * k * k * w + k * k * k;
}

FastCount count_fast(long a, long X, bool include_unit, Exec exec) {
  require_window(a, X);
  FastCount out;
  while (out.w_max + 1 <= a / 2 && sum_norm128(a, 1, out.w_max + 1) <= X) ++out.w_max;
  long k_max = 1;
  while (Int(k_max + 1) * (k_max + 1) * (k_max + 1) <= X) ++k_max;

  // N >= k^3 and N >= a k^2 w whenever w <= k a / 2
  auto row = [&](long k, std::vector<SumPair>& dst) {
    long w_hi = k * out.w_max;
    if (a >= 1) w_hi = std::min(w_hi, X / (a * k * k));
    for (long w = 0; w <= w_hi; ++w) {
      if (std::gcd(k, w) != 1) continue;
      if (k == 1 && w == 0 && !include_unit) continue;
      if (sum_norm128(a, k, w) <= X) dst.push_back({k, w});
    }
  };
  if (exec == Exec::Parallel) {
    std::vector<std::vector<SumPair>> rows(k_max + 1);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (long k = 1; k <= k_max; ++k) row(k, rows[k]);
    for (auto& r : rows) out.pairs.insert(out.pairs.end(), r.begin(), r.end());
  } else {
    for (long k = 1; k <= k_max; ++k) row(k, out.pairs);
  }
  return out;
}

std::size_t count_exact(long a, long X, bool include_unit, Exec exec) {
  const Field field = make_field(Family::SimplestCubic, a);
  const auto fast = count_fast(a, X, include_unit, exec);
  std::vector<HnfSet> sets;
  for_each_index(static_cast<std::int64_t>(fast.pairs.size()), exec, sets, [&](std::int64_t i, HnfSet& s) {
    const auto& p = fast.pairs[i];
    const OrderElement beta(field, 0, -p.w, p.k);
    s.insert(ideal_hnf(beta));
    s.insert(ideal_hnf(conjugate(beta, 1)));
    s.insert(ideal_hnf(conjugate(beta, 2)));
  });
  return merged_size(sets);
}

std::size_t count_bruteforce(long a, long X, bool include_unit, Exec exec) {
  require(a <= 12, ErrorKind::GuardExceeded, "brute-force counting is limited to a <= 12");
  require_window(a, X);
  const Field field = make_field(Family::SimplestCubic, a);
  const auto units = unit_generators(field);
  const OrderElement one = OrderElement::one(field);
  const OrderElement& e1 = units.totally_positive[0];
  const OrderElement& e2 = units.totally_positive[1];
  const std::array<std::array<OrderElement, 3>, 2> cones{{{one, e1, e2}, {one, e1, e1 * inverse_unit(e2)}}};

  // x = sum t_i u_i over unit generators has N(x)^(1/3) >= sum t_i, so the
  // region is cut by sum t_i <= X^(1/3). Each cone point is a half-open
  // parallelepiped representative p plus a non-negative integer combination.
  struct Rep {
    int cone;
    OrderElement p;
    Int tsum;  // sum of the numerators of t(p), over d
  };
  std::vector<Rep> reps;
  std::array<Int, 2> dets;
  for (int c = 0; c < 2; ++c) {
    Matrix3 u;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) u[i][k] = cones[c][k][i];
    Int d = det(u);
    Matrix3 adj = adjugate(u);
    if (d < 0) {
      d = -d;
      for (auto& r : adj)
        for (auto& v : r) v = -v;
    }
    dets[c] = d;
    for (const auto& p : parallelepiped_points(cones[c][0], cones[c][1], cones[c][2])) {
      const Coords n = apply_matrix(adj, p.coords());
      if (n[0] == d || n[1] == d || n[2] == d) continue;
      reps.push_back({c, p, n[0] + n[1] + n[2]});
    }
  }

  std::vector<HnfSet> sets;
  for_each_index(static_cast<std::int64_t>(reps.size()), exec, sets, [&](std::int64_t i, HnfSet& s) {
    const Rep& r = reps[i];
    const Int& d = dets[r.cone];
    const auto& u = cones[r.cone];
    // (sum c_i d + tsum)^3 <= X d^3
    auto fits = [&](const Int& csum) {
      const Int s3 = csum * d + r.tsum;
      return s3 * s3 * s3 <= Int(X) * d * d * d;
    };
    for (long c0 = 0; fits(c0); ++c0)
      for (long c1 = 0; fits(c0 + c1); ++c1)
        for (long c2 = 0; fits(c0 + c1 + c2); ++c2) {
          const OrderElement x = r.p + Int(c0) * u[0] + Int(c1) * u[1] + Int(c2) * u[2];
          if (x.is_zero() || !primitive(x)) continue;
          const Int n = norm(x);
          if (n > X || (n == 1 && !include_unit)) continue;
          s.insert(ideal_hnf(x));
        }
  });
  return merged_size(sets);
}

bool power_basis_is_maximal(long a) {
  const Int m = Int(a) * a + 3 * Int(a) + 9;
  if (is_squarefree(m)) return true;
  return m % 9 == 0 && m % 27 != 0 && is_squarefree(m / 9);
}

long sq_count(long a) {
  const Field field = make_field(Family::SimplestCubic, a);
  long n = 0;
  for (const auto& r : indecomposables_simplest(field))
    if (is_squarefree(norm(r.element))) ++n;
  return n;
}

std::vector<SqRow> sq_table(long a_min, long a_max, Exec exec) {
  std::vector<long> as;
  for (long a = a_min; a <= a_max; ++a) as.push_back(a);
  std::vector<SqRow> rows(as.size());
  const auto n = static_cast<std::int64_t>(as.size());
  auto body = [&](std::int64_t i) {
    const long a = as[i];
    rows[i] = {a, sq_count(a), (a * a + 3 * a + 6) / 2, power_basis_is_maximal(a)};
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (std::int64_t i = 0; i < n; ++i) body(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i);
  }
  return rows;
}

MaxNorm max_norm_indecomposable(long a) {
  require(a >= 4, ErrorKind::IllegalParameter, "max norm scan needs a >= 4");
  const Field field = make_field(Family::SimplestCubic, a);
  MaxNorm best{{0, 0}, true, norm(OrderElement(field, 1, 1, 1))};
  for (const auto& p : triangle_points(a)) {
    const Int n = triangle_norm(a, p);
    if (n > best.norm) best = {p, false, n};
  }
  return best;
}

}  // namespace indec

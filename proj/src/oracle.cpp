#include "indec/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace indec {

namespace {

class CubicModel final : public EmbeddingModel {
 public:
  explicit CubicModel(Field field) : field_(std::move(field)) {
    width_ = default_root_width(*field_);
    mpq_div_2exp(width_.get_mpq_t(), width_.get_mpq_t(), 44);
    cached_ = compute(width_);
  }

  int dim() const override { return 3; }
  Rat initial_width() const override { return width_; }

  std::vector<std::vector<RatInterval>> matrix(const Rat& width) const override {
    if (width >= width_) return cached_;
    return compute(width);
  }

 private:
  std::vector<std::vector<RatInterval>> compute(const Rat& width) const {
    const RootIntervals r = isolate_roots(*field_, width);
    std::vector<std::vector<RatInterval>> m(3, std::vector<RatInterval>(3));
    for (int i = 0; i < 3; ++i) {
      m[i][0] = point(Rat(1));
      m[i][1] = r.roots[i];
      m[i][2] = r.roots[i] * r.roots[i];
    }
    return m;
  }

  Field field_;
  Rat width_;
  std::vector<std::vector<RatInterval>> cached_;
};

constexpr std::int64_t kCoordGuard = std::int64_t(1) << 40;

RatInterval eval_bound(const RVec& z, const std::vector<RatInterval>& row) {
  RatInterval s = point(Rat(0));
  for (std::size_t j = 0; j < z.size(); ++j) s = s + z[j] * row[j];
  return s;
}

RatInterval det_interval(const std::vector<std::vector<RatInterval>>& m, int d) {
  if (d == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// adj[j][i] is the cofactor of entry (i, j).
std::vector<std::vector<RatInterval>> adj_interval(const std::vector<std::vector<RatInterval>>& m, int d) {
  std::vector<std::vector<RatInterval>> a(d, std::vector<RatInterval>(d));
  if (d == 2) {
    a[0][0] = m[1][1];
    a[0][1] = -m[0][1];
    a[1][0] = -m[1][0];
    a[1][1] = m[0][0];
    return a;
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return a;
}

bool is_exact_zero(const RatInterval& x) { return x.lo == 0 && x.hi == 0; }

struct Prepared {
  int d = 3;
  std::array<std::int64_t, 3> lo{0, 0, 0}, hi{-1, -1, -1};
  // enumeration coordinate k is original coordinate perm[k]
  std::array<int, 3> perm{0, 1, 2};
  std::vector<std::array<DInterval, 3>> e;
  std::vector<std::optional<DInterval>> lower, upper;
  bool eq = false;
  std::array<std::int64_t, 3> c{0, 0, 0};
  std::int64_t t = 0;
  bool empty = false;
};

struct Exact {
  CoordBox box;
  std::vector<std::vector<RatInterval>> m;
  std::vector<std::optional<RatInterval>> lower, upper;
};

Exact exact_box(const Region& region) {
  const int d = region.model->dim();
  require(static_cast<int>(region.lower.size()) == d && static_cast<int>(region.upper.size()) == d,
          ErrorKind::IllegalParameter, "region needs one bound pair per embedding");
  Rat width = region.model->initial_width();
  for (int attempt = 0; attempt < 64; ++attempt, width /= 2) {
    Exact out;
    out.m = region.model->matrix(width);
    const RatInterval det = det_interval(out.m, d);
    if (!det.sign_definite()) continue;
    out.lower.resize(d);
    out.upper.resize(d);
    for (int i = 0; i < d; ++i) {
      if (region.lower[i]) out.lower[i] = eval_bound(*region.lower[i], out.m[i]);
      if (region.upper[i]) out.upper[i] = eval_bound(*region.upper[i], out.m[i]);
    }
    const auto adj = adj_interval(out.m, d);
    const RatInterval inv_det{1 / det.hi, 1 / det.lo};
    out.box.lo.resize(d);
    out.box.hi.resize(d);
    for (int j = 0; j < d; ++j) {
      RatInterval s = point(Rat(0));
      for (int i = 0; i < d; ++i) {
        const RatInterval coef = adj[j][i] * inv_det;
        if (is_exact_zero(coef)) continue;
        if (!out.lower[i] || !out.upper[i])
          fail(ErrorKind::UnboundedRegion, "region is unbounded in embedding " + std::to_string(i));
        s = s + coef * RatInterval{out.lower[i]->lo, out.upper[i]->hi};
      }
      out.box.lo[j] = ceil_of(s.lo);
      out.box.hi[j] = floor_of(s.hi);
    }
    return out;
  }
  fail(ErrorKind::Internal, "root refinement cap reached while bounding a region");
}

Prepared prepare(const Region& region) {
  const Exact ex = exact_box(region);
  Prepared p;
  p.d = region.model->dim();
  const int d = p.d;
  for (int j = 0; j < d; ++j) {
    if (ex.box.lo[j] > ex.box.hi[j]) p.empty = true;
    require(abs(ex.box.lo[j]) < kCoordGuard && abs(ex.box.hi[j]) < kCoordGuard, ErrorKind::GuardExceeded,
            "search box exceeds the 2^40 coordinate guard");
  }
  if (region.equation) {
    require(static_cast<int>(region.equation->c.size()) == d, ErrorKind::IllegalParameter, "equation arity");
    int last = -1;
    for (int j = d - 1; j >= 0; --j) {
      if (region.equation->c[j] != 0) {
        last = j;
        break;
      }
    }
    require(last >= 0, ErrorKind::IllegalParameter, "equation has no nonzero coefficient");
    std::swap(p.perm[last], p.perm[d - 1]);
    p.eq = true;
    for (int k = 0; k < d; ++k) {
      require(fits_i64(region.equation->c[p.perm[k]]), ErrorKind::GuardExceeded, "equation coefficient too large");
      p.c[k] = to_i64(region.equation->c[p.perm[k]]);
    }
    require(fits_i64(region.equation->t), ErrorKind::GuardExceeded, "equation constant too large");
    p.t = to_i64(region.equation->t);
  }
  for (int k = 0; k < d; ++k) {
    p.lo[k] = to_i64(ex.box.lo[p.perm[k]]);
    p.hi[k] = to_i64(ex.box.hi[p.perm[k]]);
  }
  p.e.resize(d);
  p.lower.resize(d);
  p.upper.resize(d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) p.e[i][k] = DInterval::from(ex.m[i][p.perm[k]]);
    if (ex.lower[i]) p.lower[i] = DInterval::from(*ex.lower[i]);
    if (ex.upper[i]) p.upper[i] = DInterval::from(*ex.upper[i]);
  }
  return p;
}

struct Range {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  void meet(double l, double h) {
    if (std::isfinite(l)) lo = std::max(lo, l);
    if (std::isfinite(h)) hi = std::min(hi, h);
  }
};

// x with lower <= a x + b <= upper, a sign-definite.
void restrict(Range& r, const DInterval& a, const DInterval& b, const std::optional<DInterval>& lower,
              const std::optional<DInterval>& upper) {
  if (a.contains_zero()) return;
  const double inf = std::numeric_limits<double>::infinity();
  if (lower) {
    const DInterval q = (*lower - b) / a;  // bound on x from the lower side
    if (a.lo > 0) r.meet(q.lo, inf);
    else r.meet(-inf, q.hi);
  }
  if (upper) {
    const DInterval q = (*upper - b) / a;
    if (a.lo > 0) r.meet(-inf, q.hi);
    else r.meet(q.lo, inf);
  }
}

bool int_range(const Range& r, std::int64_t box_lo, std::int64_t box_hi, std::int64_t& lo, std::int64_t& hi) {
  lo = box_lo;
  hi = box_hi;
  if (std::isfinite(r.lo) && r.lo > static_cast<double>(lo)) lo = static_cast<std::int64_t>(std::ceil(r.lo));
  if (std::isfinite(r.hi) && r.hi < static_cast<double>(hi)) hi = static_cast<std::int64_t>(std::floor(r.hi));
  return lo <= hi;
}

Point unpermute(const Prepared& p, const std::array<std::int64_t, 3>& y) {
  Point x{0, 0, 0};
  for (int k = 0; k < p.d; ++k) x[p.perm[k]] = y[k];
  return x;
}

// Visits the candidates of one outer slab x0 in lexicographic order of the
// permuted coordinates. Returns false if `visit` asked to stop.
template <class Visit>
bool slab(const Prepared& p, std::int64_t x0, Visit&& visit) {
  const int d = p.d;
  const DInterval X0 = DInterval::exact(static_cast<double>(x0));
  std::array<std::int64_t, 3> y{x0, 0, 0};
  if (d == 2) {
    std::int64_t lo, hi;
    if (p.eq) {
      const std::int64_t num = p.t - p.c[0] * x0;
      if (num % p.c[1] != 0) return true;
      lo = hi = num / p.c[1];
      if (lo < p.lo[1] || lo > p.hi[1]) return true;
    } else {
      Range r;
      for (int i = 0; i < 2; ++i) restrict(r, p.e[i][1], p.e[i][0] * X0, p.lower[i], p.upper[i]);
      if (!int_range(r, p.lo[1], p.hi[1], lo, hi)) return true;
    }
    for (std::int64_t x1 = lo; x1 <= hi; ++x1) {
      y[1] = x1;
      if (!visit(y)) return false;
    }
    return true;
  }
  std::vector<DInterval> s(3);
  for (int i = 0; i < 3; ++i) s[i] = p.e[i][0] * X0;
  Range mid;
  if (p.eq) {
    // x2 = (t - c0 x0 - c1 x1) / c2
    const double c1c2 = static_cast<double>(p.c[1]) / static_cast<double>(p.c[2]);
    const DInterval ratio = DInterval::widen(c1c2, c1c2);
    const double rest = static_cast<double>(p.t - p.c[0] * x0) / static_cast<double>(p.c[2]);
    const DInterval rest_i = DInterval::widen(rest, rest);
    for (int i = 0; i < 3; ++i) {
      const DInterval g = p.e[i][1] - p.e[i][2] * ratio;
      const DInterval h = s[i] + p.e[i][2] * rest_i;
      restrict(mid, g, h, p.lower[i], p.upper[i]);
    }
  } else {
    for (int i = 0; i < 3; ++i) {
      for (int k = i + 1; k < 3; ++k) {
        if (!p.lower[i] || !p.upper[i] || !p.lower[k] || !p.upper[k]) continue;
        const DInterval det = p.e[i][1] * p.e[k][2] - p.e[k][1] * p.e[i][2];
        if (det.contains_zero()) continue;
        const DInterval yi{(*p.lower[i] - s[i]).lo, (*p.upper[i] - s[i]).hi};
        const DInterval yk{(*p.lower[k] - s[k]).lo, (*p.upper[k] - s[k]).hi};
        const DInterval x1 = (p.e[k][2] * yi - p.e[i][2] * yk) / det;
        mid.meet(x1.lo, x1.hi);
      }
    }
  }
  std::int64_t lo1, hi1;
  if (!int_range(mid, p.lo[1], p.hi[1], lo1, hi1)) return true;
  for (std::int64_t x1 = lo1; x1 <= hi1; ++x1) {
    y[1] = x1;
    if (p.eq) {
      const std::int64_t num = p.t - p.c[0] * x0 - p.c[1] * x1;
      if (num % p.c[2] != 0) continue;
      const std::int64_t x2 = num / p.c[2];
      if (x2 < p.lo[2] || x2 > p.hi[2]) continue;
      y[2] = x2;
      if (!visit(y)) return false;
      continue;
    }
    const DInterval X1 = DInterval::exact(static_cast<double>(x1));
    Range inner;
    for (int i = 0; i < 3; ++i) restrict(inner, p.e[i][2], s[i] + p.e[i][1] * X1, p.lower[i], p.upper[i]);
    std::int64_t lo2, hi2;
    if (!int_range(inner, p.lo[2], p.hi[2], lo2, hi2)) continue;
    for (std::int64_t x2 = lo2; x2 <= hi2; ++x2) {
      y[2] = x2;
      if (!visit(y)) return false;
    }
  }
  return true;
}

bool identity_perm(const Prepared& p) { return p.perm == std::array<int, 3>{0, 1, 2}; }

}  // namespace

std::shared_ptr<const EmbeddingModel> cubic_model(const Field& field) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, std::string, std::string>, std::shared_ptr<const EmbeddingModel>> cache;
  const auto key = std::make_tuple(field->c2.get_str(), field->c1.get_str(), field->c0.get_str());
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto model = std::make_shared<const CubicModel>(field);
  cache.emplace(key, model);
  return model;
}

CoordBox search_box(const Region& region) { return exact_box(region).box; }

std::vector<Point> enumerate_region(const Region& region, const Predicate& accept, Exec exec, EnumStats* stats) {
  const Prepared p = prepare(region);
  std::vector<Point> out;
  if (p.empty) return out;
  const std::int64_t n0 = p.hi[0] - p.lo[0] + 1;
  std::vector<std::vector<Point>> per(static_cast<std::size_t>(n0));
  std::uint64_t candidates = 0;
  auto run = [&](std::int64_t k) -> std::uint64_t {
    std::uint64_t local = 0;
    auto& bucket = per[static_cast<std::size_t>(k)];
    slab(p, p.lo[0] + k, [&](const std::array<std::int64_t, 3>& y) {
      ++local;
      const Point x = unpermute(p, y);
      if (accept(x)) bucket.push_back(x);
      return true;
    });
    return local;
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : candidates) num_threads(thread_count())
    for (std::int64_t k = 0; k < n0; ++k) candidates += run(k);
  } else {
    for (std::int64_t k = 0; k < n0; ++k) candidates += run(k);
  }
  for (auto& b : per) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  if (stats) {
    stats->candidates += candidates;
    stats->hits += out.size();
  }
  return out;
}

std::optional<Point> first_in_region(const Region& region, const Predicate& accept, Exec exec, EnumStats* stats) {
  const Prepared p = prepare(region);
  if (p.empty) return std::nullopt;
  if (!identity_perm(p)) {
    auto all = enumerate_region(region, accept, exec, stats);
    if (all.empty()) return std::nullopt;
    return all.front();
  }
  const std::int64_t n0 = p.hi[0] - p.lo[0] + 1;
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};
  std::vector<std::optional<Point>> found(static_cast<std::size_t>(n0));
  std::uint64_t candidates = 0;
  auto run = [&](std::int64_t k) -> std::uint64_t {
    std::uint64_t local = 0;
    if (k > best.load()) return 0;
    slab(p, p.lo[0] + k, [&](const std::array<std::int64_t, 3>& y) {
      ++local;
      const Point x = unpermute(p, y);
      if (!accept(x)) return true;
      found[static_cast<std::size_t>(k)] = x;
      std::int64_t cur = best.load();
      while (k < cur && !best.compare_exchange_weak(cur, k)) {
      }
      return false;
    });
    return local;
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : candidates) num_threads(thread_count())
    for (std::int64_t k = 0; k < n0; ++k) candidates += run(k);
  } else {
    for (std::int64_t k = 0; k < n0 && best.load() == std::numeric_limits<std::int64_t>::max(); ++k)
      candidates += run(k);
  }
  std::optional<Point> result;
  const std::int64_t b = best.load();
  if (b != std::numeric_limits<std::int64_t>::max()) result = found[static_cast<std::size_t>(b)];
  if (stats) {
    stats->candidates += candidates;
    stats->hits += result ? 1 : 0;
  }
  return result;
}

namespace {

RVec rvec(const Coords& c) { return {Rat(c[0]), Rat(c[1]), Rat(c[2])}; }
RVec rvec(const RatCoords& c) { return {c[0], c[1], c[2]}; }

OrderElement element(const Field& f, const Point& x) { return {f, from_i64(x[0]), from_i64(x[1]), from_i64(x[2])}; }

}  // namespace

std::optional<Decomposition> decompose(const OrderElement& alpha, Exec exec) {
  require(is_totally_positive(alpha), ErrorKind::OutOfDomain, "decompose needs a totally positive element");
  const Field& f = alpha.field();
  Region region;
  region.model = cubic_model(f);
  region.lower.assign(3, RVec{0, 0, 0});
  region.upper.assign(3, rvec(alpha.coords()));
  const auto av = alpha.to_i64();
  const auto poly = fast::MinPoly::of(*f);
  auto accept = [&](const Point& x) {
    if (x == Point{0, 0, 0} || x == av) return false;
    if (!fast::is_totally_positive(x, poly, f)) return false;
    const Point rest{av[0] - x[0], av[1] - x[1], av[2] - x[2]};
    return fast::is_totally_positive(rest, poly, f);
  };
  const auto hit = first_in_region(region, accept, exec);
  if (!hit) return std::nullopt;
  const OrderElement beta = element(f, *hit);
  Decomposition d{beta, alpha - beta};
  require(is_totally_positive(d.beta) && is_totally_positive(d.gamma), ErrorKind::Internal,
          "decomposition parts are not totally positive");
  return d;
}

namespace {

Region slice_region(const OrderElement& alpha, long t) {
  const Field& f = alpha.field();
  const OrderElement fp = fprime(f);
  RatCoords z = mul_rat(*f, to_rat(fp.coords()), inverse_rat(alpha));
  for (auto& c : z) c *= t;
  // sign of f' at each root: the enclosures are sign-definite at the model's width
  const auto m = cubic_model(f)->matrix(cubic_model(f)->initial_width());
  Region region;
  region.model = cubic_model(f);
  region.lower.resize(3);
  region.upper.resize(3);
  for (int i = 0; i < 3; ++i) {
    const RatInterval s = eval_bound(rvec(fp.coords()), m[i]);
    require(s.sign_definite(), ErrorKind::Internal, "sign of f' at a root is undetermined");
    if (s.positive()) {
      region.lower[i] = RVec{0, 0, 0};
      region.upper[i] = rvec(z);
    } else {
      region.lower[i] = rvec(z);
      region.upper[i] = RVec{0, 0, 0};
    }
  }
  // Tr(alpha gamma / f') is the rho^2 coordinate of alpha gamma
  Region::Equation eq;
  const OrderElement rho = OrderElement::rho(f);
  OrderElement pw = alpha;
  for (int j = 0; j < 3; ++j) {
    eq.c.push_back(pw[2]);
    pw = pw * rho;
  }
  eq.t = t;
  region.equation = eq;
  return region;
}

Predicate slice_predicate(const OrderElement& alpha) {
  const Field f = alpha.field();
  const OrderElement fp = fprime(f);
  return [f, fp](const Point& x) {
    const OrderElement g = element(f, x);
    if (g.is_zero()) return false;
    return is_totally_positive(g * fp);
  };
}

}  // namespace

std::vector<CodifferentElement> trace_slice(const OrderElement& alpha, long t, Exec exec) {
  require(is_totally_positive(alpha), ErrorKind::OutOfDomain, "trace slice needs a totally positive element");
  require(t >= 1, ErrorKind::IllegalParameter, "trace must be positive");
  std::vector<CodifferentElement> out;
  for (const auto& x : enumerate_region(slice_region(alpha, t), slice_predicate(alpha), exec))
    out.emplace_back(element(alpha.field(), x));
  return out;
}

std::optional<MinTrace> min_trace(const OrderElement& alpha, long t_max, Exec exec) {
  require(is_totally_positive(alpha), ErrorKind::OutOfDomain, "min_trace needs a totally positive element");
  require(t_max >= 1, ErrorKind::IllegalParameter, "t_max must be at least 1");
  const auto accept = slice_predicate(alpha);
  for (long t = 1; t <= t_max; ++t) {
    if (auto hit = first_in_region(slice_region(alpha, t), accept, exec)) {
      MinTrace r{t, CodifferentElement(element(alpha.field(), *hit))};
      require(trace_pairing(r.witness, alpha) == t && is_totally_positive_codiff(r.witness), ErrorKind::Internal,
              "trace witness failed verification");
      return r;
    }
  }
  return std::nullopt;
}

std::vector<OrderElement> elements_of_trace(const CodifferentElement& delta, long t, Exec exec) {
  require(is_totally_positive_codiff(delta), ErrorKind::OutOfDomain, "elements_of_trace needs a totally positive delta");
  require(t >= 1, ErrorKind::IllegalParameter, "trace must be positive");
  const Field& f = delta.field();
  const OrderElement& g = delta.numerator();
  // 0 < sigma_i(beta) < t / sigma_i(delta) = t sigma_i(f' / gamma)
  RatCoords z = mul_rat(*f, to_rat(fprime(f).coords()), inverse_rat(g));
  for (auto& c : z) c *= t;
  Region region;
  region.model = cubic_model(f);
  region.lower.assign(3, RVec{0, 0, 0});
  region.upper.assign(3, rvec(z));
  Region::Equation eq;
  OrderElement pw = g;
  for (int j = 0; j < 3; ++j) {
    eq.c.push_back(pw[2]);
    pw = pw * OrderElement::rho(f);
  }
  eq.t = t;
  region.equation = eq;
  const auto poly = fast::MinPoly::of(*f);
  auto accept = [&](const Point& x) { return x != Point{0, 0, 0} && fast::is_totally_positive(x, poly, f); };
  std::vector<OrderElement> out;
  for (const auto& x : enumerate_region(region, accept, exec)) out.push_back(element(f, x));
  return out;
}

std::vector<OrderElement> parallelepiped_points(const OrderElement& u1, const OrderElement& u2,
                                                const OrderElement& u3) {
  check_same_field(u1, u2);
  check_same_field(u1, u3);
  Matrix3 u;
  const OrderElement* us[3] = {&u1, &u2, &u3};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) u[i][k] = (*us[k])[i];
  Int d = det(u);
  require(d != 0, ErrorKind::DegenerateSpan, "parallelepiped generators are linearly dependent");
  Matrix3 adj = adjugate(u);
  if (d < 0) {
    d = -d;
    for (auto& row : adj)
      for (auto& v : row) v = -v;
  }
  // x = U t with t in [0,1]^3  <=>  0 <= adj(U) x <= det for each row
  std::array<Int, 3> lo, hi;
  for (int i = 0; i < 3; ++i) {
    lo[i] = 0;
    hi[i] = 0;
    for (int k = 0; k < 3; ++k) {
      if (u[i][k] < 0) lo[i] += u[i][k];
      else hi[i] += u[i][k];
    }
  }
  std::vector<OrderElement> out;
  for (Int x0 = lo[0]; x0 <= hi[0]; ++x0) {
    for (Int x1 = lo[1]; x1 <= hi[1]; ++x1) {
      Int l = lo[2], h = hi[2];
      bool ok = true;
      for (int k = 0; k < 3 && ok; ++k) {
        const Int base = adj[k][0] * x0 + adj[k][1] * x1;
        const Int& c = adj[k][2];
        if (c == 0) {
          ok = base >= 0 && base <= d;
          continue;
        }
        // 0 <= base + c x2 <= d
        Int a = -base, b = d - base;
        if (c > 0) {
          l = std::max(l, ceil_div(a, c));
          h = std::min(h, floor_div(b, c));
        } else {
          l = std::max(l, ceil_div(b, c));
          h = std::min(h, floor_div(a, c));
        }
      }
      if (!ok) continue;
      for (Int x2 = l; x2 <= h; ++x2) out.emplace_back(u1.field(), x0, x1, x2);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrderElement> fundamental_window(const Field& field) {
  const auto units = unit_generators(field);
  const OrderElement one = OrderElement::one(field);
  const OrderElement& e1 = units.totally_positive[0];
  const OrderElement& e2 = units.totally_positive[1];
  const OrderElement e3 = e1 * inverse_unit(e2);
  std::set<OrderElement> pts;
  for (const auto& x : parallelepiped_points(one, e1, e2))
    if (!x.is_zero()) pts.insert(x);
  for (const auto& x : parallelepiped_points(one, e1, e3))
    if (!x.is_zero()) pts.insert(x);
  return {pts.begin(), pts.end()};
}

std::vector<OrderElement> indecomposables_by_search(const Field& field, Exec exec) {
  const auto window = fundamental_window(field);
  std::vector<char> keep(window.size(), 0);
  const auto n = static_cast<std::int64_t>(window.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (std::int64_t i = 0; i < n; ++i) keep[i] = !decompose(window[i]).has_value();
  } else {
    for (std::int64_t i = 0; i < n; ++i) keep[i] = !decompose(window[i]).has_value();
  }
  std::vector<OrderElement> out;
  for (std::int64_t i = 0; i < n; ++i)
    if (keep[i]) out.push_back(window[i]);
  return out;
}

}  // namespace indec

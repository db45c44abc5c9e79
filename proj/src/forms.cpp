#include "indec/forms.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "indec/ideal.hpp"
#include "indec/oracle.hpp"

namespace indec {

long root_lattice_dp(long R) {
  require(R >= 1, ErrorKind::IllegalRank, "rank must be at least 1");
  // (rank, half the number of roots)
  std::vector<std::pair<long, long>> items = {{6, 36}, {7, 63}, {8, 120}};
  for (long n = 1; n <= R; ++n) {
    items.emplace_back(n, n * (n + 1) / 2);
    if (n >= 4) items.emplace_back(n, n * (n - 1));
  }
  std::vector<long> best(R + 1, 0);
  for (long r = 1; r <= R; ++r) {
    best[r] = best[r - 1];
    for (const auto& [k, v] : items)
      if (k <= r) best[r] = std::max(best[r], best[r - k] + v);
  }
  return best[R];
}

long M_table(long R) {
  require(R >= 1, ErrorKind::IllegalRank, "rank must be at least 1");
  static constexpr long listed[] = {1, 3, 6, 12, 20, 36, 63, 120};
  if (R <= 8) return listed[R - 1];
  if (R <= 15) return root_lattice_dp(R);
  return R * (R - 1);
}

namespace {

std::size_t bit_size(const Coords& c) {
  std::size_t b = 1;
  for (const auto& v : c) b = std::max(b, mpz_sizeinbase(v.get_mpz_t(), 2));
  return b;
}

// Solves V y = s for the Vandermonde matrix of the roots.
std::array<mpf_class, 3> solve_vandermonde(const std::array<mpf_class, 3>& r, std::array<mpf_class, 3> s,
                                           mp_bitcnt_t prec) {
  std::array<std::array<mpf_class, 4>, 3> m;
  for (int i = 0; i < 3; ++i) {
    m[i][0] = mpf_class(1, prec);
    m[i][1] = mpf_class(r[i], prec);
    m[i][2] = mpf_class(r[i] * r[i], prec);
    m[i][3] = mpf_class(s[i], prec);
  }
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int i = c + 1; i < 3; ++i)
      if (abs(m[i][c]) > abs(m[piv][c])) piv = i;
    std::swap(m[c], m[piv]);
    for (int i = 0; i < 3; ++i) {
      if (i == c) continue;
      const mpf_class k(m[i][c] / m[c][c], prec);
      for (int j = c; j < 4; ++j) m[i][j] -= k * m[c][j];
    }
  }
  std::array<mpf_class, 3> y;
  for (int i = 0; i < 3; ++i) y[i] = mpf_class(m[i][3] / m[i][i], prec);
  return y;
}

mpf_class to_mpf(const Rat& q, mp_bitcnt_t prec) { return mpf_class(q, prec); }

std::optional<Int> near_integer(const mpf_class& x) {
  mpf_class r = floor(x + 0.5);
  if (abs(x - r) > 0.25) return std::nullopt;
  return Int(r);
}

}  // namespace

std::optional<OrderElement> exact_sqrt(const OrderElement& x) {
  const Field& f = x.field();
  if (x.is_zero()) return x;
  if (!is_totally_positive(x)) return std::nullopt;
  // y has about half the size of x; the roots are tiny by comparison
  const mp_bitcnt_t prec = 128 + 4 * bit_size(x.coords()) + 4 * bit_size({f->c2, f->c1, f->c0});
  const Rat width(Int(1), Int(1) << static_cast<unsigned long>(prec));
  const RootIntervals roots = isolate_roots(*f, width);
  std::array<mpf_class, 3> r, s;
  for (int i = 0; i < 3; ++i) {
    r[i] = to_mpf(roots.roots[i].mid(), prec);
    mpf_class v(x[0], prec);
    v += x[1] * r[i];
    v += x[2] * r[i] * r[i];
    s[i] = sqrt(v);
  }
  for (int signs = 0; signs < 4; ++signs) {
    std::array<mpf_class, 3> t = s;
    if (signs & 1) t[1] = -t[1];
    if (signs & 2) t[2] = -t[2];
    const auto y = solve_vandermonde(r, t, prec);
    Coords c;
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      const auto v = near_integer(y[i]);
      ok = v.has_value();
      if (ok) c[i] = *v;
    }
    if (!ok) continue;
    const OrderElement cand(f, c);
    if (cand * cand == x) return cand;
  }
  return std::nullopt;
}

std::optional<OrderElement> exact_quotient(const OrderElement& x, const OrderElement& y) {
  check_same_field(x, y);
  const RatCoords q = mul_rat(*x.field(), to_rat(x.coords()), inverse_rat(y));
  Coords c;
  for (int i = 0; i < 3; ++i) {
    if (q[i].get_den() != 1) return std::nullopt;
    c[i] = q[i].get_num();
  }
  return OrderElement(x.field(), c);
}

std::vector<OrderElement> unit_square_classes(const Field& field) {
  const auto gens = unit_generators(field).totally_positive;
  const OrderElement one = OrderElement::one(field);
  const std::array<OrderElement, 4> cands = {one, gens[0], gens[1], gens[0] * gens[1]};
  std::vector<OrderElement> out;
  for (const auto& c : cands) {
    bool fresh = true;
    // c and d lie in the same coset iff c d is a square
    for (const auto& d : out) fresh = fresh && !exact_sqrt(c * d);
    if (fresh) out.push_back(c);
  }
  return out;
}

std::vector<OrderElement> DiagonalForm::coefficients() const {
  std::vector<OrderElement> out;
  for (const auto& r : representatives)
    for (int j = 0; j < multiplicity; ++j) out.push_back(r);
  return out;
}

namespace {

struct InventoryIndex {
  std::vector<IndecomposableRecord> records;
  // first record of each unit class
  std::map<IdealHNF, std::size_t> by_ideal;
  std::vector<std::size_t> class_heads;
};

const InventoryIndex& inventory_index(const Field& field) {
  require(field->family != Family::CustomCubic, ErrorKind::UnsupportedFamily, "no inventory for custom cubics");
  static std::mutex mu;
  static std::map<std::pair<int, long>, std::unique_ptr<InventoryIndex>> cache;
  const auto key = std::make_pair(static_cast<int>(field->family), field->a);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) {
    auto idx = std::make_unique<InventoryIndex>();
    idx->records = indecomposables(field);
    for (std::size_t i = 0; i < idx->records.size(); ++i) {
      if (idx->by_ideal.emplace(ideal_hnf(idx->records[i].element), i).second) idx->class_heads.push_back(i);
    }
    slot = std::move(idx);
  }
  return *slot;
}

}  // namespace

DiagonalForm diagonal_universal(const Field& field) {
  const auto& idx = inventory_index(field);
  const auto classes = unit_square_classes(field);
  DiagonalForm form;
  for (std::size_t h : idx.class_heads)
    for (const auto& c : classes) form.representatives.push_back(idx.records[h].element * c);
  return form;
}

QuadDiagonalForm diagonal_universal(const CFExpansion& cf) {
  const auto& f = cf.field;
  // The totally positive fundamental unit is alpha_{s-1} for even s and is
  // not a square; for odd s it is the square of alpha_{s-1}.
  std::vector<QuadElement> classes = {{1, 0}};
  if (cf.s() % 2 == 0) classes.push_back(totally_positive_unit(cf));
  std::set<QuadHNF> seen;
  QuadDiagonalForm form;
  for (const auto& r : indecomposables_quadratic(cf, f.discriminant())) {
    if (!seen.insert(quad_ideal_hnf(f, r.element)).second) continue;
    for (const auto& c : classes) form.representatives.push_back(mul(f, r.element, c));
  }
  return form;
}

std::string RadicalBound::to_string() const {
  return "(" + coefficient.get_str() + ")*sqrt(" + radicand.get_str() + ")";
}

namespace {

RadicalBound radical(const Rat& c, const Int& r) {
  const Rat sq = c * c * r;
  Int k = isqrt(floor_of(sq));
  while (Rat(k * k) < sq) ++k;
  return {c, r, k};
}

}  // namespace

CodifferentElement family_delta(const Field& field) {
  switch (field->family) {
    case Family::SimplestCubic:
      return triangle_delta(field);
    case Family::Ennola:
      return ennola_delta(field);
    case Family::Thomas: {
      auto d = thomas_row2_certificate(field);
      require(d.has_value(), ErrorKind::CertificateFailure, "no trace-2 certificate for " + field->describe());
      return *d;
    }
    case Family::CustomCubic:
      break;
  }
  fail(ErrorKind::UnsupportedFamily, "no certificate delta for " + field->describe());
}

RankReport rank_report(const Field& field, Exec exec) {
  const long a = field->a;
  RankReport rep{field->family, a, 0, std::nullopt, std::nullopt, 0, 0, 0, std::nullopt, std::nullopt, {}, false};
  const bool small = field->family != Family::SimplestCubic || std::abs(a) <= kReportEnumerateMax;
  const Int A(a);
  if (small) {
    const auto delta = family_delta(field);
    rep.n = elements_of_trace(delta, 1, exec).size();
    long m = 0;
    for (const auto& b : elements_of_trace(delta, 2, exec))
      if (!decompose(b)) ++m;
    rep.m = m;
    rep.enumerated = true;
    rep.s_count = diagonal_universal(field).representatives.size();
  } else {
    rep.n = (A * A + 3 * A + 8) / 2;
    rep.s_count = (A * A + 3 * A + 6) / 2;
  }
  if (field->family == Family::Ennola) rep.m_quoted = A - 1;
  if (field->family == Family::Thomas) rep.m_quoted = A;
  const long M3 = M_table(3);
  rep.upper_diag = kPythagorasCubic * rep.s_count;
  rep.lower_classical = ceil_div(rep.n, 3);
  if (rep.m) rep.lower_diag = ceil_div(*rep.m, M3);
  if (rep.m_quoted) rep.lower_diag_quoted = ceil_div(*rep.m_quoted, M3);
  rep.lower_nonclassical = rep.n >= 240 ? radical(Rat(1, 3), rep.n) : radical(Rat(1, 6), 2 * rep.n);
  return rep;
}

std::vector<DescentPart> decompose_into_indecomposables(const OrderElement& alpha) {
  require(is_totally_positive(alpha), ErrorKind::OutOfDomain, "decomposition needs a totally positive element");
  const auto& idx = inventory_index(alpha.field());
  std::vector<DescentPart> out;
  std::vector<OrderElement> stack = {alpha};
  while (!stack.empty()) {
    const OrderElement x = stack.back();
    stack.pop_back();
    const auto it = idx.by_ideal.find(ideal_hnf(x));
    if (it != idx.by_ideal.end()) {
      const auto u = exact_quotient(x, idx.records[it->second].element);
      require(u && abs(norm(*u)) == 1, ErrorKind::Internal, "associated elements differ by a non-unit");
      out.push_back({it->second, *u, x});
      continue;
    }
    const auto d = decompose(x);
    require(d.has_value(), ErrorKind::DescentStuck, "indecomposable outside the inventory: " + x.to_string());
    stack.push_back(d->gamma);
    stack.push_back(d->beta);
  }
  OrderElement sum = OrderElement::integer(alpha.field(), 0);
  for (const auto& p : out) sum = sum + p.element;
  require(sum == alpha, ErrorKind::Internal, "descent parts do not add up");
  return out;
}

namespace {

bool nonneg(const OrderElement& x) { return x.is_zero() || is_totally_positive(x); }

struct SquareSearch {
  const std::vector<OrderElement>& cands;
  std::set<std::pair<Coords, int>> dead;
  std::vector<OrderElement> chosen;

  bool run(const OrderElement& rest, int k, std::size_t start) {
    if (rest.is_zero()) return true;
    if (k == 0 || dead.count({rest.coords(), k})) return false;
    for (std::size_t i = start; i < cands.size(); ++i) {
      const OrderElement next = rest - cands[i] * cands[i];
      if (!nonneg(next)) continue;
      chosen.push_back(cands[i]);
      if (run(next, k - 1, i)) return true;
      chosen.pop_back();
    }
    dead.insert({rest.coords(), k});
    return false;
  }
};

}  // namespace

std::optional<std::vector<OrderElement>> sum_of_squares(const OrderElement& beta, int max_terms) {
  require(max_terms >= 0, ErrorKind::IllegalParameter, "term count must be non-negative");
  if (beta.is_zero()) return std::vector<OrderElement>{};
  if (!is_totally_positive(beta)) return std::nullopt;
  const Field& f = beta.field();
  const auto e = embed(beta, f->roots);
  Region region;
  region.model = cubic_model(f);
  region.lower.resize(3);
  region.upper.resize(3);
  for (int i = 0; i < 3; ++i) {
    // |sigma_i(x)| <= sqrt(sigma_i(beta)) <= isqrt(ceil(hi)) + 1
    const Rat c(isqrt(ceil_of(e[i].hi)) + 1);
    region.lower[i] = RVec{-c, 0, 0};
    region.upper[i] = RVec{c, 0, 0};
  }
  auto accept = [&](const Point& p) {
    if (p == Point{0, 0, 0}) return false;
    // one of +-x
    const auto lead = p[0] != 0 ? p[0] : p[1] != 0 ? p[1] : p[2];
    if (lead < 0) return false;
    const OrderElement x(f, from_i64(p[0]), from_i64(p[1]), from_i64(p[2]));
    return nonneg(beta - x * x);
  };
  std::vector<OrderElement> cands;
  for (const auto& p : enumerate_region(region, accept)) cands.emplace_back(f, from_i64(p[0]), from_i64(p[1]), from_i64(p[2]));
  // large squares first
  std::stable_sort(cands.begin(), cands.end(),
                   [](const OrderElement& x, const OrderElement& y) { return trace(x * x) > trace(y * y); });
  SquareSearch s{cands, {}, {}};
  if (!s.run(beta, max_terms, 0)) return std::nullopt;
  return s.chosen;
}

Representation represent(const DiagonalForm& form, const OrderElement& alpha) {
  const Field& f = alpha.field();
  std::map<IdealHNF, std::vector<std::size_t>> reps;
  for (std::size_t k = 0; k < form.representatives.size(); ++k)
    reps[ideal_hnf(form.representatives[k])].push_back(k);
  const auto parts = decompose_into_indecomposables(alpha);
  std::map<std::size_t, std::vector<OrderElement>> groups;
  for (const auto& p : parts) {
    bool placed = false;
    for (std::size_t k : reps[ideal_hnf(p.element)]) {
      const auto q = exact_quotient(p.element, form.representatives[k]);
      if (!q) continue;
      if (auto u = exact_sqrt(*q)) {
        groups[k].push_back(*u);
        placed = true;
        break;
      }
    }
    require(placed, ErrorKind::Internal, "part has no square class representative: " + p.element.to_string());
  }
  Representation out;
  out.parts = parts.size();
  for (auto& [k, us] : groups) {
    std::vector<OrderElement> xs = us;
    if (static_cast<int>(xs.size()) > form.multiplicity) {
      OrderElement beta = OrderElement::integer(f, 0);
      for (const auto& u : us) beta = beta + u * u;
      auto sq = sum_of_squares(beta, form.multiplicity);
      require(sq.has_value(), ErrorKind::CertificateFailure,
              "no sum of " + std::to_string(form.multiplicity) + " squares for " + beta.to_string());
      xs = *sq;
      ++out.regrouped;
    }
    for (std::size_t j = 0; j < xs.size(); ++j) out.terms.push_back({k * form.multiplicity + j, xs[j]});
  }
  const auto coeffs = form.coefficients();
  OrderElement sum = OrderElement::integer(f, 0);
  for (const auto& t : out.terms) sum = sum + coeffs[t.coefficient] * t.x * t.x;
  require(sum == alpha, ErrorKind::Internal, "representation does not add up");
  return out;
}

WindowReport verify_universality_window(const Field& field, long trace_bound, Exec exec) {
  require(std::abs(field->a) <= kWindowMaxA, ErrorKind::GuardExceeded, "window verification is limited to |a| <= 8");
  require(trace_bound >= 1 && trace_bound <= kWindowMaxTrace, ErrorKind::GuardExceeded,
          "trace bound must lie in 1..12");
  const auto delta = family_delta(field);
  const auto form = diagonal_universal(field);
  std::vector<OrderElement> elems;
  for (long t = 1; t <= trace_bound; ++t)
    for (auto& x : elements_of_trace(delta, t, exec)) elems.push_back(std::move(x));
  const auto n = static_cast<std::int64_t>(elems.size());
  std::vector<Representation> reps(n);
  std::vector<char> ok(n, 0);
  auto body = [&](std::int64_t i) {
    try {
      reps[i] = represent(form, elems[i]);
      ok[i] = 1;
    } catch (const Error&) {
      ok[i] = 0;
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (std::int64_t i = 0; i < n; ++i) body(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i);
  }
  WindowReport out;
  out.trace_bound = trace_bound;
  out.checked = elems.size();
  for (std::int64_t i = 0; i < n; ++i) {
    if (!ok[i]) {
      out.failures.push_back(elems[i]);
      continue;
    }
    out.max_parts = std::max(out.max_parts, reps[i].parts);
    out.regrouped += reps[i].regrouped;
  }
  return out;
}

}  // namespace indec

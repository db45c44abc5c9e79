#include "indec/quadratic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "indec/factor.hpp"

namespace indec {

QuadField make_quad_field(const Int& D) {
  require(D > 1, ErrorKind::IllegalParameter, "D must exceed 1");
  require(is_squarefree(D), ErrorKind::NotSquarefree, "D = " + D.get_str() + " is not squarefree");
  QuadField f;
  f.D = D;
  const Int r = D % 4;
  f.mod4 = static_cast<int>(r.get_si());
  return f;
}

std::string QuadElement::to_string() const { return "(" + x.get_str() + ", " + y.get_str() + ")"; }

QuadElement add(const QuadElement& a, const QuadElement& b) { return {a.x + b.x, a.y + b.y}; }
QuadElement sub(const QuadElement& a, const QuadElement& b) { return {a.x - b.x, a.y - b.y}; }
QuadElement scale(const Int& k, const QuadElement& a) { return {k * a.x, k * a.y}; }

QuadElement mul(const QuadField& f, const QuadElement& a, const QuadElement& b) {
  // omega^2 = D, or omega + (D-1)/4
  const Int yy = a.y * b.y;
  if (f.one_mod_4()) return {a.x * b.x + yy * ((f.D - 1) / 4), a.x * b.y + a.y * b.x + yy};
  return {a.x * b.x + yy * f.D, a.x * b.y + a.y * b.x};
}

QuadElement conjugate(const QuadField& f, const QuadElement& a) {
  if (f.one_mod_4()) return {a.x + a.y, -a.y};
  return {a.x, -a.y};
}

Int trace(const QuadField& f, const QuadElement& a) { return 2 * a.x + (f.one_mod_4() ? a.y : Int(0)); }

Int norm(const QuadField& f, const QuadElement& a) {
  if (f.one_mod_4()) return a.x * a.x + a.x * a.y - a.y * a.y * ((f.D - 1) / 4);
  return a.x * a.x - f.D * a.y * a.y;
}

namespace {

// sign of u + v sqrt(D)
int surd_sign(const Int& u, const Int& v, const Int& D) {
  const int su = sgn(u), sv = sgn(v);
  if (su >= 0 && sv >= 0) return su + sv > 0 ? 1 : 0;
  if (su <= 0 && sv <= 0) return -1;
  const int c = cmp(u * u, D * v * v);
  return su > 0 ? c : -c;
}

}  // namespace

std::array<int, 2> signature(const QuadField& f, const QuadElement& a) {
  // 2 sigma = (2x + y) +- y sqrt(D) when D = 1 mod 4
  const Int u = f.one_mod_4() ? Int(2 * a.x + a.y) : a.x;
  return {surd_sign(u, a.y, f.D), surd_sign(u, -a.y, f.D)};
}

bool is_totally_positive(const QuadField& f, const QuadElement& a) {
  const auto s = signature(f, a);
  return s[0] > 0 && s[1] > 0;
}

CFExpansion cf_expand(const Int& D) {
  CFExpansion cf;
  cf.field = make_quad_field(D);
  const Int r = isqrt(D);
  // xi = (P + sqrt D) / Q; Q always divides D - P^2
  Int P = cf.field.one_mod_4() ? Int(-1) : Int(0);
  Int Q = cf.field.one_mod_4() ? Int(2) : Int(1);
  auto step = [&](Int& u) {
    u = floor_div(P + r, Q);
    P = u * Q - P;
    Q = (D - P * P) / Q;
  };
  step(cf.u0);
  const Int P1 = P, Q1 = Q;
  do {
    Int u;
    step(u);
    cf.period.push_back(u);
  } while (P != P1 || Q != Q1);
  return cf;
}

Convergents convergents(const CFExpansion& cf, long imax) {
  Convergents c;
  c.p_ = {1};
  c.q_ = {0};
  Int pm2 = 0, qm2 = 1;
  for (long i = 0; i <= imax; ++i) {
    const Int& u = cf.u(i);
    const Int p = u * c.p_.back() + pm2, q = u * c.q_.back() + qm2;
    pm2 = c.p_.back();
    qm2 = c.q_.back();
    c.p_.push_back(p);
    c.q_.push_back(q);
  }
  return c;
}

QuadElement convergent(const CFExpansion& cf, long i) {
  require(i >= -1, ErrorKind::IndexOutOfRange, "convergent index below -1");
  const auto c = convergents(cf, std::max(i, 0L));
  return {c.p(i), c.q(i)};
}

QuadElement semiconvergent(const CFExpansion& cf, long i, const Int& r) {
  require(i >= -1, ErrorKind::IndexOutOfRange, "semiconvergent index below -1");
  require(r >= 0 && r <= cf.u(i + 2), ErrorKind::IndexOutOfRange, "r outside [0, u_{i+2}]");
  const auto c = convergents(cf, i + 1);
  return {c.p(i) + r * c.p(i + 1), c.q(i) + r * c.q(i + 1)};
}

std::vector<QuadRecord> indecomposables_quadratic(const CFExpansion& cf, const Int& norm_bound) {
  require(norm_bound >= 1, ErrorKind::IllegalParameter, "norm bound must be at least 1");
  const QuadField& f = cf.field;
  const long cycle = cf.s() % 2 == 0 ? cf.s() : 2 * cf.s();
  const auto c = convergents(cf, cycle);
  std::vector<QuadRecord> out;
  for (long i = -1; i <= cycle - 3; i += 2) {
    const long ur = cf.u(i + 2).get_si();
    for (long r = 0; r < ur; ++r) {
      const QuadElement a{c.p(i) + r * c.p(i + 1), c.q(i) + r * c.q(i + 1)};
      if (norm(f, a) > norm_bound) continue;
      out.push_back({a, i, r, false});
      out.push_back({conjugate(f, a), i, r, true});
    }
  }
  return out;
}

QuadElement totally_positive_unit(const CFExpansion& cf) {
  const QuadElement e = convergent(cf, cf.s() - 1);
  return cf.s() % 2 == 0 ? e : mul(cf.field, e, e);
}

Int trace_pairing(const QuadField& f, const QuadCodifferent& d, const QuadElement& a) { return mul(f, d.gamma, a).y; }

bool is_totally_positive(const QuadField& f, const QuadCodifferent& d) {
  const auto s = signature(f, d.gamma);
  return s[0] > 0 && s[1] < 0;
}

TraceOneDelta trace_one_delta(const CFExpansion& cf, long i) {
  require(i >= -1 && (i % 2 != 0), ErrorKind::IndexOutOfRange, "trace-one delta needs odd i >= -1");
  const QuadField& f = cf.field;
  const QuadElement next = convergent(cf, i + 1);
  const QuadElement base = scale(-1, conjugate(f, next));
  // For D = 2, 3 mod 4 both readings coincide with -alpha'_{i+1} / (2 sqrt D).
  // For D = 1 mod 4 the displayed -sqrt(D) alpha'_{i+1} is tried first.
  std::vector<std::pair<std::string, QuadElement>> candidates;
  if (f.one_mod_4()) candidates.push_back({"-sqrt(D) * alpha'_{i+1}", scale(f.D, base)});
  candidates.push_back({"-alpha'_{i+1} / sqrt(disc)", base});
  TraceOneDelta out;
  const Int u = cf.u(i + 2);
  for (const auto& [name, gamma] : candidates) {
    const QuadCodifferent d{gamma};
    bool ok = is_totally_positive(f, d);
    for (Int r = 0; ok && r <= u; ++r) ok = trace_pairing(f, d, semiconvergent(cf, i, r)) == 1;
    if (ok) {
      out.delta = d;
      out.scaling = name;
      return out;
    }
    out.rejected.push_back(name);
  }
  fail(ErrorKind::CertificateFailure, "no trace-one delta for D = " + f.D.get_str() + ", i = " + std::to_string(i));
}

QuadCounts quad_counts(const CFExpansion& cf) {
  const long s = cf.s();
  QuadCounts c;
  Int mx = 0;
  c.s_count = 0;
  for (long j = 1; j <= s; ++j) {
    const Int& u = cf.u(2 * j - 1);
    c.s_count += u;
    mx = std::max(mx, u);
  }
  c.n = mx + 1;
  if (s % 2 == 0) {
    Int m = 0, sum = 0;
    for (long i = 1; i < s; i += 2) {
      m = std::max(m, cf.u(i));
      sum += cf.u(i);
    }
    c.n_display = m + 1;
    c.s_count_display = 2 * sum;
  } else {
    c.n_display = 2 * cf.u(s - 1) + 1;
    c.s_count_display = 2 * cf.u0;
    for (long i = 1; i < s; ++i) c.s_count_display += cf.u(i);
  }
  return c;
}

namespace {

class QuadModel final : public EmbeddingModel {
 public:
  explicit QuadModel(QuadField f) : f_(std::move(f)) {}
  int dim() const override { return 2; }
  Rat initial_width() const override {
    Rat w(1);
    mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), 40);
    return w;
  }
  std::vector<std::vector<RatInterval>> matrix(const Rat& width) const override {
    unsigned k = 0;
    Rat step(1);
    while (step > width) {
      step /= 2;
      ++k;
    }
    const Int r = isqrt(f_.D << (2 * k));
    RatInterval sq{Rat(r) * step, Rat(r + 1) * step};
    RatInterval w1 = sq, w2 = -sq;
    if (f_.one_mod_4()) {
      w1 = Rat(1, 2) * (point(Rat(1)) + sq);
      w2 = Rat(1, 2) * (point(Rat(1)) - sq);
    }
    return {{point(Rat(1)), w1}, {point(Rat(1)), w2}};
  }

 private:
  QuadField f_;
};

}  // namespace

std::shared_ptr<const EmbeddingModel> quad_model(const QuadField& f) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const EmbeddingModel>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& m = cache[f.D.get_str()];
  if (!m) m = std::make_shared<const QuadModel>(f);
  return m;
}

QuadHNF quad_ideal_hnf(const QuadField& f, const QuadElement& a) {
  require(!(a.x == 0 && a.y == 0), ErrorKind::ZeroElement, "ideal of zero");
  const QuadElement b = mul(f, a, QuadElement{0, 1});
  // rows (a.x, a.y), (b.x, b.y)
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.y.get_mpz_t(), b.y.get_mpz_t());
  QuadHNF h;
  if (g == 0) fail(ErrorKind::Internal, "degenerate ideal basis");
  h.h11 = abs(g);
  Int first = s * a.x + t * b.x;
  if (g < 0) first = -first;
  h.h00 = abs(Int((b.y / g) * a.x - (a.y / g) * b.x));
  h.h10 = first % h.h00;
  if (h.h10 < 0) h.h10 += h.h00;
  return h;
}

std::optional<QuadElement> quad_decompose(const QuadField& f, const QuadElement& a, Exec exec) {
  require(is_totally_positive(f, a), ErrorKind::OutOfDomain, "decompose needs a totally positive element");
  Region region;
  region.model = quad_model(f);
  region.lower.assign(2, RVec{0, 0});
  region.upper.assign(2, RVec{Rat(a.x), Rat(a.y)});
  auto accept = [&](const Point& p) {
    const QuadElement b{from_i64(p[0]), from_i64(p[1])};
    if ((b.x == 0 && b.y == 0) || b == a) return false;
    return is_totally_positive(f, b) && is_totally_positive(f, sub(a, b));
  };
  const auto hit = first_in_region(region, accept, exec);
  if (!hit) return std::nullopt;
  return QuadElement{from_i64((*hit)[0]), from_i64((*hit)[1])};
}

std::vector<QuadElement> quad_indecomposables_by_search(const CFExpansion& cf, Exec exec) {
  const QuadField& f = cf.field;
  const QuadElement e = totally_positive_unit(cf);
  // X = t1 + t2 e.x, Y = t2 e.y with t in [0, 1]^2
  require(e.y > 0, ErrorKind::Internal, "unexpected unit orientation");
  std::vector<QuadElement> window;
  for (Int Y = 0; Y <= e.y; ++Y) {
    const Int lo = ceil_div(Y * e.x, e.y), hi = floor_div(e.y + Y * e.x, e.y);
    for (Int X = lo; X <= hi; ++X) {
      const QuadElement p{X, Y};
      if (!(X == 0 && Y == 0) && is_totally_positive(f, p)) window.push_back(p);
    }
  }
  std::vector<char> keep(window.size(), 0);
  const auto n = static_cast<std::int64_t>(window.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (std::int64_t i = 0; i < n; ++i) keep[i] = !quad_decompose(f, window[i]).has_value();
  } else {
    for (std::int64_t i = 0; i < n; ++i) keep[i] = !quad_decompose(f, window[i]).has_value();
  }
  std::vector<QuadElement> out;
  for (std::int64_t i = 0; i < n; ++i)
    if (keep[i]) out.push_back(window[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace indec

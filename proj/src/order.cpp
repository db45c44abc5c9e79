#include "indec/order.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace indec {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::SimplestCubic: return "simplest";
    case Family::Ennola: return "ennola";
    case Family::Thomas: return "thomas";
    case Family::CustomCubic: return "custom";
  }
  return "custom";
}

Family parse_family(std::string_view name) {
  if (name == "simplest" || name == "SimplestCubic") return Family::SimplestCubic;
  if (name == "ennola" || name == "Ennola") return Family::Ennola;
  if (name == "thomas" || name == "Thomas") return Family::Thomas;
  if (name == "custom" || name == "CustomCubic") return Family::CustomCubic;
  fail(ErrorKind::IllegalParameter, "unknown family '" + std::string(name) + "'");
}

Int FieldSpec::discriminant() const {
  const Int& b = c2;
  const Int& c = c1;
  const Int& d = c0;
  return b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << to_string(family);
  if (family != Family::CustomCubic) os << "(a=" << a << ")";
  os << ": x^3 + (" << c2 << ")x^2 + (" << c1 << ")x + (" << c0 << ")";
  return os.str();
}

namespace {

// Polynomials over Q, lowest degree first.
using Poly = std::vector<Rat>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rat eval(const Poly& p, const Rat& x) {
  Rat r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

Poly rem(Poly n, const Poly& d) {
  trim(n);
  while (n.size() >= d.size()) {
    const Rat q = n.back() / d.back();
    const std::size_t shift = n.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) n[i + shift] -= q * d[i];
    n.pop_back();
    trim(n);
  }
  return n;
}

std::vector<Poly> sturm_chain(const FieldSpec& f) {
  Poly p0{f.c0, f.c1, f.c2, 1};
  Poly p1{f.c1, 2 * Rat(f.c2), 3};
  std::vector<Poly> chain{p0, p1};
  while (chain.back().size() > 1) {
    Poly r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes(const std::vector<Poly>& chain, const Rat& x) {
  int changes = 0, prev = 0;
  for (const auto& p : chain) {
    const int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

Int root_bound(const FieldSpec& f) {
  Int m = abs(f.c2);
  m = std::max<Int>(m, abs(f.c1));
  m = std::max<Int>(m, abs(f.c0));
  return m + 1;
}

// f has no rational roots, so it never vanishes at an endpoint and a sign
// change on [lo, hi] pins down exactly one root once isolation is known.
RatInterval refine(const FieldSpec& f, RatInterval iv, const Rat& width) {
  int slo = sgn(f.eval(iv.lo));
  while (iv.width() > width) {
    const Rat m = iv.mid();
    const int sm = sgn(f.eval(m));
    if (sm == slo) {
      iv.lo = m;
    } else {
      iv.hi = m;
    }
  }
  return iv;
}

std::vector<RatInterval> generic_isolation(const FieldSpec& f) {
  const auto chain = sturm_chain(f);
  const Int b = root_bound(f);
  std::vector<RatInterval> out;
  std::vector<RatInterval> todo{{Rat(-b), Rat(b)}};
  while (!todo.empty()) {
    RatInterval iv = todo.back();
    todo.pop_back();
    const int n = sign_changes(chain, iv.lo) - sign_changes(chain, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(iv);
      continue;
    }
    const Rat m = iv.mid();
    todo.push_back({iv.lo, m});
    todo.push_back({m, iv.hi});
  }
  require(out.size() == 3, ErrorKind::NotTotallyReal, "expected three real roots for " + f.describe());
  std::sort(out.begin(), out.end(), [](const RatInterval& x, const RatInterval& y) { return x.lo > y.lo; });
  return out;
}

std::optional<std::vector<RatInterval>> seeded_isolation(const FieldSpec& f) {
  if (f.family != Family::SimplestCubic || f.a < 7) return std::nullopt;
  const Rat a(f.a);
  std::vector<RatInterval> seeds{
      {a + 1, a + 1 + Rat(2) / a},
      {-1 - Rat(1) / a, -1 - Rat(1) / (2 * a)},
      {Rat(-1) / (a + 2), Rat(-1) / (a + 3)},
  };
  for (const auto& s : seeds) {
    if (sgn(f.eval(s.lo)) == sgn(f.eval(s.hi))) return std::nullopt;
  }
  return seeds;
}

Matrix3 compute_galois_matrix(const FieldSpec& f, const Field& handle);

}  // namespace

Rat default_root_width(const FieldSpec& field) {
  Rat w(2 * root_bound(field));
  mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), 20);
  return w;
}

RootIntervals isolate_roots(const FieldSpec& field, const Rat& width) {
  require(width > 0, ErrorKind::IllegalParameter, "isolation width must be positive");
  std::vector<RatInterval> ivs;
  if (auto seeded = seeded_isolation(field)) {
    ivs = *seeded;
  } else {
    ivs = generic_isolation(field);
    if (field.family == Family::SimplestCubic) {
      // descending is (rho, rho'', rho'); the family convention is (rho, rho', rho'')
      std::swap(ivs[1], ivs[2]);
    }
  }
  RootIntervals out;
  out.width = width;
  for (int i = 0; i < 3; ++i) out.roots[i] = refine(field, ivs[i], width);
  return out;
}

namespace {

bool has_rational_root(const Int& c2, const Int& c1, const Int& c0) {
  // monic integer cubic: rational roots are integers dividing c0
  if (c0 == 0) return true;
  const Int n = abs(c0);
  auto root = [&](const Int& x) { return ((x + c2) * x + c1) * x + c0 == 0; };
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const Int e = n / d;
    if (root(d) || root(-d) || root(e) || root(-e)) return true;
  }
  return false;
}

Field build(Family family, long a, const Int& c2, const Int& c1, const Int& c0) {
  require(!has_rational_root(c2, c1, c0), ErrorKind::Reducible, "minimal polynomial has a rational root");
  auto spec = std::make_shared<FieldSpec>();
  spec->family = family;
  spec->a = a;
  spec->c2 = c2;
  spec->c1 = c1;
  spec->c0 = c0;
  require(spec->discriminant() > 0, ErrorKind::NotTotallyReal, "discriminant is not positive");
  spec->roots = isolate_roots(*spec, default_root_width(*spec));
  if (family == Family::SimplestCubic) spec->galois = compute_galois_matrix(*spec, spec);
  return spec;
}

}  // namespace

Field make_field(Family family, long a) {
  const Int A(a);
  switch (family) {
    case Family::SimplestCubic:
      require(a >= -1, ErrorKind::IllegalParameter, "simplest cubic family needs a >= -1");
      return build(family, a, -A, -(A + 3), -1);
    case Family::Ennola:
      require(a >= 3, ErrorKind::IllegalParameter, "Ennola family needs a >= 3");
      return build(family, a, A - 1, -A, -1);
    case Family::Thomas:
      require(a >= 2, ErrorKind::IllegalParameter, "Thomas family needs a >= 2");
      return build(family, a, -(2 * A + 2), A * (A + 2), -1);
    case Family::CustomCubic:
      fail(ErrorKind::IllegalParameter, "custom cubics are built with make_custom_field");
  }
  fail(ErrorKind::Internal, "unreachable family");
}

Field make_custom_field(const Int& c2, const Int& c1, const Int& c0) {
  return build(Family::CustomCubic, 0, c2, c1, c0);
}

std::array<std::int64_t, 3> OrderElement::to_i64() const {
  for (const auto& c : c_) require(fits_i64(c), ErrorKind::OutOfRange, "coordinate exceeds 64 bits");
  return {indec::to_i64(c_[0]), indec::to_i64(c_[1]), indec::to_i64(c_[2])};
}

std::string OrderElement::to_string() const {
  return "(" + str(c_[0]) + ", " + str(c_[1]) + ", " + str(c_[2]) + ")";
}

void check_same_field(const OrderElement& x, const OrderElement& y) {
  if (x.field() == y.field()) return;
  require(x.field() && y.field() && x.field()->same_order(*y.field()), ErrorKind::FieldMismatch,
          "elements belong to different orders");
}

OrderElement operator+(const OrderElement& x, const OrderElement& y) {
  check_same_field(x, y);
  return {x.field(), x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}

OrderElement operator-(const OrderElement& x, const OrderElement& y) {
  check_same_field(x, y);
  return {x.field(), x[0] - y[0], x[1] - y[1], x[2] - y[2]};
}

OrderElement operator-(const OrderElement& x) { return {x.field(), -x[0], -x[1], -x[2]}; }

OrderElement operator*(const Int& s, const OrderElement& x) { return {x.field(), s * x[0], s * x[1], s * x[2]}; }

OrderElement mul(const OrderElement& x, const OrderElement& y) {
  check_same_field(x, y);
  const FieldSpec& f = *x.field();
  return {x.field(), mul_coords<Int, Int>(x.coords(), y.coords(), f.c2, f.c1, f.c0)};
}

OrderElement pow(const OrderElement& x, unsigned e) {
  OrderElement r = OrderElement::one(x.field());
  OrderElement b = x;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

namespace {

template <class T>
std::array<std::array<T, 3>, 3> mult_matrix(const std::array<T, 3>& v, const T& c2, const T& c1, const T& c0) {
  // x*rho for x = (x0,x1,x2) is (-c0 x2, x0 - c1 x2, x1 - c2 x2)
  auto times_rho = [&](const std::array<T, 3>& x) {
    return std::array<T, 3>{T(-c0 * x[2]), T(x[0] - c1 * x[2]), T(x[1] - c2 * x[2])};
  };
  const auto col1 = times_rho(v);
  const auto col2 = times_rho(col1);
  std::array<std::array<T, 3>, 3> m;
  for (int i = 0; i < 3; ++i) {
    m[i][0] = v[i];
    m[i][1] = col1[i];
    m[i][2] = col2[i];
  }
  return m;
}

template <class T>
void char_poly(const std::array<std::array<T, 3>, 3>& m, T& e1, T& e2, T& e3) {
  e1 = m[0][0] + m[1][1] + m[2][2];
  e2 = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) + (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
       (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  e3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

Matrix3 multiplication_matrix(const OrderElement& x) {
  const FieldSpec& f = *x.field();
  return mult_matrix<Int>(x.coords(), f.c2, f.c1, f.c0);
}

SymFuncs sym_funcs(const OrderElement& x) {
  SymFuncs s;
  char_poly<Int>(multiplication_matrix(x), s.e1, s.e2, s.e3);
  return s;
}

RatCoords to_rat(const Coords& c) { return {Rat(c[0]), Rat(c[1]), Rat(c[2])}; }

RatCoords mul_rat(const FieldSpec& f, const RatCoords& x, const RatCoords& y) {
  return mul_coords<Rat, Int>(x, y, f.c2, f.c1, f.c0);
}

RatCoords inverse_rat(const OrderElement& x) {
  require(!x.is_zero(), ErrorKind::ZeroElement, "inverse of zero");
  const Matrix3 m = multiplication_matrix(x);
  const Rat d(det(m));
  const Matrix3 adj = adjugate(m);
  return {adj[0][0] / d, adj[1][0] / d, adj[2][0] / d};
}

Rat trace_rat(const FieldSpec& f, const RatCoords& x) {
  // Tr(1) = 3, Tr(rho) = -c2, Tr(rho^2) = c2^2 - 2 c1
  return 3 * x[0] - Rat(f.c2) * x[1] + Rat(f.c2 * f.c2 - 2 * f.c1) * x[2];
}

std::array<Rat, 3> sym_funcs_rat(const FieldSpec& f, const RatCoords& x) {
  const auto m = mult_matrix<Rat>(x, Rat(f.c2), Rat(f.c1), Rat(f.c0));
  std::array<Rat, 3> e;
  char_poly<Rat>(m, e[0], e[1], e[2]);
  return e;
}

bool is_totally_positive(const OrderElement& x) {
  require(!x.is_zero(), ErrorKind::ZeroElement, "total positivity of zero");
  const SymFuncs s = sym_funcs(x);
  return s.e1 > 0 && s.e2 > 0 && s.e3 > 0;
}

Matrix3 identity3() {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
  return m;
}

Coords apply_matrix(const Matrix3& m, const Coords& v) {
  Coords r;
  for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return r;
}

Matrix3 matmul(const Matrix3& x, const Matrix3& y) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j] + x[i][2] * y[2][j];
  return r;
}

Int det(const Matrix3& m) {
  Int e1, e2, e3;
  char_poly<Int>(m, e1, e2, e3);
  return e3;
}

Matrix3 adjugate(const Matrix3& m) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // cofactor of entry (j, i)
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return r;
}

OrderElement inverse_unit(const OrderElement& u) {
  const Matrix3 m = multiplication_matrix(u);
  const Int d = det(m);
  require(d == 1 || d == -1, ErrorKind::OutOfDomain, "element " + u.to_string() + " is not a unit");
  const Matrix3 adj = adjugate(m);
  return {u.field(), d * adj[0][0], d * adj[1][0], d * adj[2][0]};
}

std::array<RatInterval, 3> embed(const Coords& x, const RootIntervals& r) {
  std::array<RatInterval, 3> out;
  for (int i = 0; i < 3; ++i) {
    const RatInterval& t = r.roots[i];
    out[i] = point(Rat(x[0])) + t * (point(Rat(x[1])) + Rat(x[2]) * t);
  }
  return out;
}

std::array<RatInterval, 3> embed(const OrderElement& x, const RootIntervals& r) { return embed(x.coords(), r); }

namespace {

Int round_nearest(const Rat& x) { return floor_of(x + Rat(1, 2)); }

// The conjugate rho' is a root of the cofactor q(Y) = f(Y)/(Y - rho) =
// Y^2 + (rho + c2) Y + (rho^2 + c2 rho + c1). A candidate in Z[rho] is
// obtained by interpolating y(r_i) = r_{i+1} through the isolated roots and
// rounding; it is then checked exactly, so rounding can never produce a
// wrong matrix, only a CertificateFailure.
Matrix3 compute_galois_matrix(const FieldSpec& f, const Field& handle) {
  Rat width = default_root_width(f);
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), 24);
    const RootIntervals ri = isolate_roots(f, width);
    std::array<Rat, 3> r;
    for (int i = 0; i < 3; ++i) r[i] = ri.roots[i].mid();
    // Lagrange interpolation of the quadratic through (r_i, r_{i+1}).
    std::array<Rat, 3> coef{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      const Rat w = r[j] / ((r[i] - r[j]) * (r[i] - r[k]));
      coef[0] += w * r[j] * r[k];
      coef[1] -= w * (r[j] + r[k]);
      coef[2] += w;
    }
    OrderElement y(handle, round_nearest(coef[0]), round_nearest(coef[1]), round_nearest(coef[2]));
    const OrderElement rho = OrderElement::rho(handle);
    const OrderElement q = y * y + (rho + OrderElement::integer(handle, f.c2)) * y +
                           (rho * rho + f.c2 * rho + OrderElement::integer(handle, f.c1));
    if (!q.is_zero() || y == rho) continue;
    const OrderElement y2 = y * y;
    Matrix3 m;
    const Coords one{1, 0, 0};
    for (int i = 0; i < 3; ++i) {
      m[i][0] = one[i];
      m[i][1] = y[i];
      m[i][2] = y2[i];
    }
    const OrderElement fy = y * y2 + f.c2 * y2 + f.c1 * y + OrderElement::integer(handle, f.c0);
    if (!fy.is_zero() || matmul(m, matmul(m, m)) != identity3()) continue;
    return m;
  }
  fail(ErrorKind::CertificateFailure, "could not certify the Galois conjugation for " + f.describe());
}

}  // namespace

Matrix3 galois_conjugation_matrix(const FieldSpec& field) {
  require(field.galois.has_value(), ErrorKind::NotGalois, "no conjugation matrix for " + field.describe());
  return *field.galois;
}

OrderElement conjugate(const OrderElement& x, unsigned times) {
  const Matrix3 m = galois_conjugation_matrix(*x.field());
  Coords c = x.coords();
  for (unsigned i = 0; i < times % 3; ++i) c = apply_matrix(m, c);
  return {x.field(), c};
}

UnitGenerators unit_generators(const Field& field) {
  const OrderElement one = OrderElement::one(field);
  const OrderElement rho = OrderElement::rho(field);
  switch (field->family) {
    case Family::SimplestCubic:
      return {{rho, conjugate(rho)}, {rho * rho, OrderElement(field, 1, 2, 1)}};
    case Family::Ennola:
      return {{rho, rho - one}, {rho * rho, rho * (rho - one)}};
    case Family::Thomas: {
      const OrderElement r = rho - OrderElement::integer(field, field->a);
      return {{rho, r}, {rho, r * r}};
    }
    case Family::CustomCubic:
      break;
  }
  fail(ErrorKind::UnsupportedFamily, "no unit system known for " + field->describe());
}

namespace fast {

MinPoly MinPoly::of(const FieldSpec& f) {
  require(fits_i64(f.c2) && fits_i64(f.c1) && fits_i64(f.c0), ErrorKind::OutOfRange,
          "minimal polynomial coefficients exceed 64 bits");
  return {indec::to_i64(f.c2), indec::to_i64(f.c1), indec::to_i64(f.c0)};
}

namespace {

std::uint64_t mag(std::int64_t x) { return x < 0 ? std::uint64_t(0) - std::uint64_t(x) : std::uint64_t(x); }

}  // namespace

std::optional<Sym128> sym_funcs(const V3& v, const MinPoly& p) {
  // Entries of the multiplication matrix are bounded by max|v| (1 + max|c|)^2;
  // below 2^40 every product in the determinant fits comfortably in 127 bits.
  const unsigned __int128 vmax = std::max({mag(v[0]), mag(v[1]), mag(v[2])});
  const unsigned __int128 cmax = 1 + std::max({mag(p.c2), mag(p.c1), mag(p.c0)});
  constexpr unsigned __int128 limit = static_cast<unsigned __int128>(1) << 40;
  if (cmax >= limit || vmax >= limit) return std::nullopt;
  if (vmax * cmax * cmax >= limit) return std::nullopt;
  const std::array<__int128, 3> w{v[0], v[1], v[2]};
  const auto m = mult_matrix<__int128>(w, p.c2, p.c1, p.c0);
  Sym128 s;
  char_poly<__int128>(m, s.e1, s.e2, s.e3);
  return s;
}

bool is_totally_positive(const V3& v, const MinPoly& p, const Field& field) {
  if (auto s = sym_funcs(v, p)) {
    require(!(v[0] == 0 && v[1] == 0 && v[2] == 0), ErrorKind::ZeroElement, "total positivity of zero");
    return s->e1 > 0 && s->e2 > 0 && s->e3 > 0;
  }
  return indec::is_totally_positive(OrderElement(field, from_i64(v[0]), from_i64(v[1]), from_i64(v[2])));
}

__int128 norm(const V3& v, const MinPoly& p, const Field& field) {
  if (auto s = sym_funcs(v, p)) return s->e3;
  const Int n = indec::norm(OrderElement(field, from_i64(v[0]), from_i64(v[1]), from_i64(v[2])));
  // Callers use this only where the norm is known to fit (counting kernels).
  require(mpz_sizeinbase(n.get_mpz_t(), 2) < 126, ErrorKind::OutOfRange, "norm exceeds 126 bits");
  __int128 r = 0;
  const Int absn = abs(n);
  const Int hi = absn >> 64;
  const Int lo = absn - (hi << 64);
  r = (static_cast<__int128>(hi.get_ui()) << 64) | static_cast<__int128>(lo.get_ui());
  return n < 0 ? -r : r;
}

}  // namespace fast

}  // namespace indec

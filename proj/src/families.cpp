#include "indec/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "indec/oracle.hpp"

namespace indec {

namespace {

void require_simplest(const Field& f) {
  require(f->family == Family::SimplestCubic, ErrorKind::UnsupportedFamily, "needs the simplest cubic family");
}

}  // namespace

bool in_triangle(long a, TrianglePoint p) { return p.v >= 0 && p.W >= 0 && p.v + p.W <= a; }

std::array<TrianglePoint, 3> unit_corners(long a) { return {TrianglePoint{0, -1}, {-1, a + 1}, {a + 1, 0}}; }

bool is_unit_corner(long a, TrianglePoint p) {
  const auto c = unit_corners(a);
  return std::find(c.begin(), c.end(), p) != c.end();
}

OrderElement triangle_element(const Field& field, TrianglePoint p) {
  require_simplest(field);
  const Int a(field->a), v(p.v), W(p.W);
  return {field, -v, -(v * (a + 2) + 1 + W), v + 1};
}

std::vector<TrianglePoint> triangle_points(long a) {
  std::vector<TrianglePoint> out;
  for (long v = 0; v <= a; ++v)
    for (long W = 0; W <= a - v; ++W) out.push_back({v, W});
  return out;
}

Int triangle_norm(long a_, TrianglePoint p) {
  require(in_triangle(a_, p), ErrorKind::OutOfTriangle, "point outside the triangle");
  const Int a(a_), v(p.v), W(p.W);
  return a * a * v * W - a * v * v * W - a * v * W * W + a * a * v - 2 * a * v * v + a * v * W + a * W * W +
         v * v * v - 3 * v * W * W - W * W * W + 3 * a * v + 3 * a * W - 3 * v * v - 3 * v * W - 3 * W * W +
         2 * a + 3;
}

TrianglePoint rotate_T1(TrianglePoint p, long a) {
  require(in_triangle(a, p) || is_unit_corner(a, p), ErrorKind::OutOfDomain, "rotation outside the triangle");
  return {p.W, a - p.v - p.W};
}

TrianglePoint rotate_T2(TrianglePoint p, long a) {
  require(in_triangle(a, p) || is_unit_corner(a, p), ErrorKind::OutOfDomain, "rotation outside the triangle");
  return {a - p.v - p.W, p.v};
}

OrderElement apply_T1(const OrderElement& x) {
  require_simplest(x.field());
  const Int a(x.field()->a);
  const OrderElement unit(x.field(), -1 - a, -(a * a + 3 * a + 3), a + 2);
  return conjugate(x, 1) * unit;
}

OrderElement apply_T2(const OrderElement& x) {
  require_simplest(x.field());
  const OrderElement rho = OrderElement::rho(x.field());
  return conjugate(x, 2) * (rho * rho);
}

std::vector<TrianglePoint> fundamental_triangle(long a) {
  require(a >= 0, ErrorKind::IllegalParameter, "fundamental triangle needs a >= 0");
  const long A = a / 3, a0 = a % 3;
  std::vector<TrianglePoint> out;
  const long vmax = a0 == 0 ? A - 1 : A;
  for (long v = 0; v <= vmax; ++v)
    for (long W = v; W <= 3 * A + a0 - 2 * v - 1; ++W) out.push_back({v, W});
  if (a0 == 0) out.push_back({A, A});
  return out;
}

std::string_view to_string(RecordKind k) {
  switch (k) {
    case RecordKind::Unit: return "unit";
    case RecordKind::Exceptional: return "exceptional";
    case RecordKind::Triangle: return "triangle";
    case RecordKind::EnnolaRow: return "ennola_row";
    case RecordKind::ThomasRow1: return "thomas_row1";
    case RecordKind::ThomasRow2: return "thomas_row2";
  }
  return "unknown";
}

std::vector<IndecomposableRecord> indecomposables_simplest(const Field& field) {
  require_simplest(field);
  const long a = field->a;
  const CodifferentElement delta = triangle_delta(field);
  std::vector<IndecomposableRecord> out;
  out.push_back({OrderElement::one(field), RecordKind::Unit, 0, 0, Certificate{delta, 1}});
  out.push_back({OrderElement(field, 1, 1, 1), RecordKind::Exceptional, 0, 0, Certificate{delta, 2}});
  for (const auto& p : triangle_points(a))
    out.push_back({triangle_element(field, p), RecordKind::Triangle, p.v, p.W, Certificate{delta, 1}});
  return out;
}

std::vector<IndecomposableRecord> indecomposables_ennola(const Field& field) {
  require(field->family == Family::Ennola, ErrorKind::UnsupportedFamily, "needs the Ennola family");
  const long a = field->a;
  const CodifferentElement delta = ennola_delta(field);
  std::vector<IndecomposableRecord> out;
  out.push_back({OrderElement::one(field), RecordKind::Unit, 0, 0, Certificate{delta, 1}});
  for (long w = 1; w <= a - 1; ++w)
    out.push_back({OrderElement(field, 1, w, 1), RecordKind::EnnolaRow, w, 0, Certificate{delta, 2}});
  return out;
}

namespace {

OrderElement thomas_row2(const Field& f, long w) {
  const Int a(f->a), W(w);
  return {f, -1, (a + 2) * W + 1, -W};
}

}  // namespace

std::optional<CodifferentElement> thomas_row2_certificate(const Field& field) {
  require(field->family == Family::Thomas, ErrorKind::UnsupportedFamily, "needs the Thomas family");
  static std::mutex mu;
  static std::map<long, std::optional<CodifferentElement>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(field->a); it != cache.end()) return it->second;
  }
  const long a = field->a;
  // Row elements are (rho - 1) + w ((a+2) rho - rho^2); a delta pairing to 2
  // with the first summand and to 0 with the second works for every w.
  const OrderElement step(field, 0, a + 2, -1);
  std::optional<CodifferentElement> found;
  for (const auto& d : trace_slice(thomas_row2(field, a), 2)) {
    if (trace_pairing(d, step) != 0) continue;
    found = d;
    break;
  }
  if (found) {
    for (long w = a; w <= 2 * a - 1; ++w)
      require(trace_pairing(*found, thomas_row2(field, w)) == 2, ErrorKind::Internal, "row certificate check");
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(a, found);
  return found;
}

std::vector<IndecomposableRecord> indecomposables_thomas(const Field& field) {
  require(field->family == Family::Thomas, ErrorKind::UnsupportedFamily, "needs the Thomas family");
  const long a = field->a;
  std::vector<IndecomposableRecord> out;
  out.push_back({OrderElement::one(field), RecordKind::Unit, 0, 0, std::nullopt});
  out.push_back({OrderElement(field, 1, -a, 1), RecordKind::Exceptional, 0, 0, std::nullopt});
  for (long v = 1; v <= a - 1; ++v)
    out.push_back({OrderElement(field, 0, (a + 2) * v + 1, -v), RecordKind::ThomasRow1, v, 0, std::nullopt});
  const auto cert = thomas_row2_certificate(field);
  for (long w = a; w <= 2 * a - 1; ++w) {
    std::optional<Certificate> c;
    if (cert) c = Certificate{*cert, 2};
    out.push_back({thomas_row2(field, w), RecordKind::ThomasRow2, w, 0, c});
  }
  return out;
}

std::vector<IndecomposableRecord> indecomposables(const Field& field) {
  switch (field->family) {
    case Family::SimplestCubic: return indecomposables_simplest(field);
    case Family::Ennola: return indecomposables_ennola(field);
    case Family::Thomas: return indecomposables_thomas(field);
    case Family::CustomCubic: break;
  }
  fail(ErrorKind::UnsupportedFamily, "no closed-form inventory for " + field->describe());
}

ParallelepipedCandidates parallelepiped_candidates(const OrderElement& u1, const OrderElement& u2,
                                                   const OrderElement& u3) {
  ParallelepipedCandidates out;
  std::set<OrderElement> vertices;
  const OrderElement zero = OrderElement::integer(u1.field(), 0);
  for (int mask = 0; mask < 8; ++mask) {
    OrderElement s = zero;
    if (mask & 1) s = s + u1;
    if (mask & 2) s = s + u2;
    if (mask & 4) s = s + u3;
    vertices.insert(s);
  }
  for (const auto& x : parallelepiped_points(u1, u2, u3)) {
    if (vertices.count(x)) out.vertex_sums.push_back(x);
    else out.candidates.push_back(x);
  }
  return out;
}

std::pair<OrderElement, OrderElement> shifted_triangle_decomposition(const Field& field, long v, long w) {
  require_simplest(field);
  const long a = field->a;
  require(v >= 0 && v <= a && w >= (v + 1) * (a + 1) + 1 && w <= (v + 1) * (a + 2), ErrorKind::OutOfRange,
          "(v, w) outside the decomposable range");
  const Int A(a), V(v), Wd(w);
  const OrderElement first(field, -V, -(A + 1) * (V + 1), V + 1);
  const OrderElement second(field, 0, -(Wd - (A + 1) * (V + 1)), 1);
  require(is_totally_positive(first) && is_totally_positive(second), ErrorKind::Internal,
          "decomposition parts are not totally positive");
  return {first, second};
}

}  // namespace indec

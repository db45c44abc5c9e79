#pragma once

// Closed-form inventories of indecomposables for the three cubic families,
// and the triangle geometry of the simplest cubic family.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "indec/codifferent.hpp"
#include "indec/order.hpp"

namespace indec {

// alpha(v, W) = -v - (v(a+2) + 1 + W) rho + (v+1) rho^2. The triangle is
// 0 <= v, 0 <= W, v + W <= a; in (v, w) terms w = v(a+2) + 1 + W.
struct TrianglePoint {
  long v = 0;
  long W = 0;
  friend bool operator==(const TrianglePoint&, const TrianglePoint&) = default;
  friend auto operator<=>(const TrianglePoint&, const TrianglePoint&) = default;
};

bool in_triangle(long a, TrianglePoint p);
// The units rho^2, 1 and (rho')^{-2} sit at (0,-1), (-1,a+1) and (a+1,0).
bool is_unit_corner(long a, TrianglePoint p);
std::array<TrianglePoint, 3> unit_corners(long a);

OrderElement triangle_element(const Field& field, TrianglePoint p);
std::vector<TrianglePoint> triangle_points(long a);

// Closed-form norm of alpha(v, W); OutOfTriangle outside the triangle.
Int triangle_norm(long a, TrianglePoint p);

TrianglePoint rotate_T1(TrianglePoint p, long a);
TrianglePoint rotate_T2(TrianglePoint p, long a);
// The same rotations on elements: x' (rho')^{-2} and x'' rho^2.
OrderElement apply_T1(const OrderElement& x);
OrderElement apply_T2(const OrderElement& x);

// One representative of each T1-orbit of the triangle.
std::vector<TrianglePoint> fundamental_triangle(long a);

enum class RecordKind { Unit, Exceptional, Triangle, EnnolaRow, ThomasRow1, ThomasRow2 };
std::string_view to_string(RecordKind k);

struct Certificate {
  CodifferentElement delta;
  long trace;
};

struct IndecomposableRecord {
  OrderElement element;
  RecordKind kind;
  // (v, W) for triangle records, (w, 0) or (v, 0) for the family rows
  long i = 0;
  long j = 0;
  std::optional<Certificate> certificate;
};

std::vector<IndecomposableRecord> indecomposables_simplest(const Field& field);
std::vector<IndecomposableRecord> indecomposables_ennola(const Field& field);
std::vector<IndecomposableRecord> indecomposables_thomas(const Field& field);
// Dispatches on the family.
std::vector<IndecomposableRecord> indecomposables(const Field& field);

// A delta with trace 2 against every second-row Thomas element; found by
// search once per field and cached.
std::optional<CodifferentElement> thomas_row2_certificate(const Field& field);

struct ParallelepipedCandidates {
  // sums of subsets of the generators
  std::vector<OrderElement> vertex_sums;
  // every other lattice point of the closed parallelepiped
  std::vector<OrderElement> candidates;
};

ParallelepipedCandidates parallelepiped_candidates(const OrderElement& u1, const OrderElement& u2,
                                                   const OrderElement& u3);

// -v - w rho + (v+2) rho^2 as an explicit sum of two totally positive elements.
std::pair<OrderElement, OrderElement> shifted_triangle_decomposition(const Field& field, long v, long w);

}  // namespace indec

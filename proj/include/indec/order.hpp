#pragma once

// Exact arithmetic in a monogenic cubic order Z[rho] = Z[x]/(f), f monic with
// three real roots. Elements are coordinate triples in the power basis
// (1, rho, rho^2); nothing here ever touches floating point except the
// outward-rounded enclosures handed to the enumeration code.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "indec/bigint.hpp"
#include "indec/errors.hpp"
#include "indec/interval.hpp"

namespace indec {

enum class Family { SimplestCubic, Ennola, Thomas, CustomCubic };

std::string_view to_string(Family f);
// Accepts "simplest", "ennola", "thomas", "custom" (and the enum spellings).
Family parse_family(std::string_view name);

using Coords = std::array<Int, 3>;
using Matrix3 = std::array<std::array<Int, 3>, 3>;

// Isolating intervals for the three real roots. For the simplest cubic
// family the order is (rho, rho', rho'') with rho' in (-2,-1) and rho'' in
// (-1,0); for every other family the roots are listed in descending order.
struct RootIntervals {
  std::array<RatInterval, 3> roots;
  Rat width;
};

struct FieldSpec {
  Family family = Family::CustomCubic;
  long a = 0;
  // f(x) = x^3 + c2 x^2 + c1 x + c0
  Int c2, c1, c0;
  RootIntervals roots;
  // Present exactly for the simplest cubic family (see galois_conjugation_matrix).
  std::optional<Matrix3> galois;

  Int discriminant() const;
  Int eval(const Int& x) const { return ((x + c2) * x + c1) * x + c0; }
  Rat eval(const Rat& x) const { return ((x + c2) * x + c1) * x + c0; }
  bool same_order(const FieldSpec& other) const { return c2 == other.c2 && c1 == other.c1 && c0 == other.c0; }
  std::string describe() const;
};

using Field = std::shared_ptr<const FieldSpec>;

Field make_field(Family family, long a);
Field make_custom_field(const Int& c2, const Int& c1, const Int& c0);

class OrderElement {
 public:
  OrderElement(Field field, Coords coords) : field_(std::move(field)), c_(std::move(coords)) {}
  OrderElement(Field field, const Int& v1, const Int& v2, const Int& v3)
      : field_(std::move(field)), c_{v1, v2, v3} {}

  static OrderElement integer(Field field, const Int& n) { return {std::move(field), n, 0, 0}; }
  static OrderElement one(Field field) { return integer(std::move(field), 1); }
  static OrderElement rho(Field field) { return {std::move(field), 0, 1, 0}; }

  const Field& field() const { return field_; }
  const Coords& coords() const { return c_; }
  const Int& operator[](std::size_t i) const { return c_[i]; }
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

  std::array<std::int64_t, 3> to_i64() const;
  std::string to_string() const;

  friend bool operator==(const OrderElement& x, const OrderElement& y) { return x.c_ == y.c_; }
  // Lexicographic on the coordinate triple; all searches use this order for
  // deterministic witnesses.
  friend bool operator<(const OrderElement& x, const OrderElement& y) { return x.c_ < y.c_; }

 private:
  Field field_;
  Coords c_;
};

void check_same_field(const OrderElement& x, const OrderElement& y);

OrderElement operator+(const OrderElement& x, const OrderElement& y);
OrderElement operator-(const OrderElement& x, const OrderElement& y);
OrderElement operator-(const OrderElement& x);
OrderElement operator*(const Int& s, const OrderElement& x);
OrderElement mul(const OrderElement& x, const OrderElement& y);
inline OrderElement operator*(const OrderElement& x, const OrderElement& y) { return mul(x, y); }
OrderElement pow(const OrderElement& x, unsigned e);

// Product of coordinate triples modulo f; shared by the integer, rational and
// fixed-width paths.
template <class T, class C>
std::array<T, 3> mul_coords(const std::array<T, 3>& x, const std::array<T, 3>& y, const C& c2, const C& c1,
                            const C& c0) {
  const T d0 = x[0] * y[0];
  const T d1 = x[0] * y[1] + x[1] * y[0];
  const T d2 = x[0] * y[2] + x[1] * y[1] + x[2] * y[0];
  const T d3 = x[1] * y[2] + x[2] * y[1];
  const T d4 = x[2] * y[2];
  // rho^3 = -c2 rho^2 - c1 rho - c0, rho^4 = (c2^2-c1) rho^2 + (c2 c1 - c0) rho + c2 c0
  return {T(d0 - c0 * d3 + c2 * c0 * d4), T(d1 - c1 * d3 + (c2 * c1 - c0) * d4),
          T(d2 - c2 * d3 + (c2 * c2 - c1) * d4)};
}

// Columns are the coordinates of x, x*rho, x*rho^2.
Matrix3 multiplication_matrix(const OrderElement& x);

// Elementary symmetric functions of the three conjugates: the characteristic
// polynomial of multiplication by x is t^3 - e1 t^2 + e2 t - e3.
struct SymFuncs {
  Int e1, e2, e3;
  const Int& trace() const { return e1; }
  const Int& norm() const { return e3; }
};

SymFuncs sym_funcs(const OrderElement& x);
inline Int trace(const OrderElement& x) { return sym_funcs(x).e1; }
inline Int norm(const OrderElement& x) { return sym_funcs(x).e3; }

// Elements of the field Q(rho) in the same power basis.
using RatCoords = std::array<Rat, 3>;

RatCoords to_rat(const Coords& c);
RatCoords mul_rat(const FieldSpec& f, const RatCoords& x, const RatCoords& y);
// Inverse in Q(rho) of a nonzero element; throws ZeroElement.
RatCoords inverse_rat(const OrderElement& x);
Rat trace_rat(const FieldSpec& f, const RatCoords& x);
// (e1, e2, e3) of a field element, exactly.
std::array<Rat, 3> sym_funcs_rat(const FieldSpec& f, const RatCoords& x);

// Exact: all conjugates are real, so they are all positive iff e1, e2, e3 > 0.
bool is_totally_positive(const OrderElement& x);

// Inverse of a unit (norm +-1); throws OutOfDomain otherwise.
OrderElement inverse_unit(const OrderElement& u);

RootIntervals isolate_roots(const FieldSpec& field, const Rat& width);
// Default isolation width used at construction: 2^-20 times the root bound.
Rat default_root_width(const FieldSpec& field);

std::array<RatInterval, 3> embed(const OrderElement& x, const RootIntervals& r);
std::array<RatInterval, 3> embed(const Coords& x, const RootIntervals& r);

// Matrix M with M * coords(x) = coords(x') where x' is the image under the
// automorphism rho -> rho'. Simplest cubic family only.
Matrix3 galois_conjugation_matrix(const FieldSpec& field);
OrderElement conjugate(const OrderElement& x, unsigned times = 1);

struct UnitGenerators {
  std::array<OrderElement, 2> fundamental;
  std::array<OrderElement, 2> totally_positive;
};

UnitGenerators unit_generators(const Field& field);

Coords apply_matrix(const Matrix3& m, const Coords& v);
Matrix3 matmul(const Matrix3& x, const Matrix3& y);
Matrix3 identity3();
Int det(const Matrix3& m);
Matrix3 adjugate(const Matrix3& m);

// Fixed-width fast path for the enumeration kernels. Values are exact when
// returned; nullopt means the inputs are too large for 128-bit evaluation and
// the caller must use the arbitrary-precision path.
namespace fast {

using V3 = std::array<std::int64_t, 3>;

struct MinPoly {
  std::int64_t c2 = 0, c1 = 0, c0 = 0;
  static MinPoly of(const FieldSpec& f);
};

struct Sym128 {
  __int128 e1, e2, e3;
};

std::optional<Sym128> sym_funcs(const V3& v, const MinPoly& p);

// Falls back to the exact big-integer path when the 128-bit evaluation could
// overflow.
bool is_totally_positive(const V3& v, const MinPoly& p, const Field& field);
__int128 norm(const V3& v, const MinPoly& p, const Field& field);

}  // namespace fast

}  // namespace indec

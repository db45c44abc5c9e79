#pragma once

// Diagonal universal forms built from the indecomposable inventory, rank
// lower bounds from elements of trace one and two, and the explicit
// representation of totally positive elements by the diagonal form.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "indec/families.hpp"
#include "indec/parallel.hpp"
#include "indec/quadratic.hpp"

namespace indec {

// Upper bounds for the Pythagoras number used as the construction
// multiplicity (d + 3 for degree d).
constexpr int kPythagorasCubic = 6;
constexpr int kPythagorasQuadratic = 5;

// Half the largest number of norm-2 vectors in a rank-R direct sum of root
// lattices A_n, D_n (n >= 4), E6, E7, E8. Computed for every R.
long root_lattice_dp(long R);
// Listed values for R <= 8, the dynamic program for 9 <= R <= 15 and
// R(R-1) from 16 on. IllegalRank for R < 1.
long M_table(long R);

// Some y with y^2 = x in Z[rho], if any.
std::optional<OrderElement> exact_sqrt(const OrderElement& x);
// x / y when it lies in Z[rho].
std::optional<OrderElement> exact_quotient(const OrderElement& x, const OrderElement& y);

// Coset representatives of the totally positive units modulo squares of
// units, starting with 1.
std::vector<OrderElement> unit_square_classes(const Field& field);

struct DiagonalForm {
  // indecomposables modulo squares of units
  std::vector<OrderElement> representatives;
  int multiplicity = kPythagorasCubic;

  std::size_t rank() const { return representatives.size() * multiplicity; }
  // each representative repeated `multiplicity` times
  std::vector<OrderElement> coefficients() const;
};

DiagonalForm diagonal_universal(const Field& field);

struct QuadDiagonalForm {
  std::vector<QuadElement> representatives;
  int multiplicity = kPythagorasQuadratic;
  std::size_t rank() const { return representatives.size() * multiplicity; }
};

QuadDiagonalForm diagonal_universal(const CFExpansion& cf);

// c sqrt(r), with the least integer not below it.
struct RadicalBound {
  Rat coefficient;
  Int radicand;
  Int ceiling;
  std::string to_string() const;
};

struct RankReport {
  Family family;
  long a;
  // elements of trace one and indecomposables of trace two against the
  // family's certificate delta
  Int n;
  std::optional<Int> m;
  // the count of trace-two indecomposables quoted for the family, if any
  std::optional<Int> m_quoted;
  Int s_count;
  Int upper_diag;
  Int lower_classical;
  std::optional<Int> lower_diag;
  std::optional<Int> lower_diag_quoted;
  RadicalBound lower_nonclassical;
  // true when n and m were counted by enumeration rather than closed form
  bool enumerated = false;
};

// n and m are enumerated for a <= kReportEnumerateMax; above it the simplest
// family uses the closed form for n and leaves m empty.
constexpr long kReportEnumerateMax = 100;
RankReport rank_report(const Field& field, Exec exec = Exec::Serial);

// The certificate delta used for trace counting in each family.
CodifferentElement family_delta(const Field& field);

struct DescentPart {
  // index into indecomposables(field)
  std::size_t record;
  // part = unit * record
  OrderElement unit;
  OrderElement element;
};

// Writes a totally positive alpha as a sum of unit multiples of inventory
// records. The sum is verified; DescentStuck if an indecomposable outside
// the inventory shows up.
std::vector<DescentPart> decompose_into_indecomposables(const OrderElement& alpha);

// x_1^2 + ... + x_k^2 = beta with k <= max_terms, by bounded search.
std::optional<std::vector<OrderElement>> sum_of_squares(const OrderElement& beta, int max_terms);

struct RepresentationTerm {
  // index into DiagonalForm::coefficients()
  std::size_t coefficient;
  OrderElement x;
};

struct Representation {
  std::vector<RepresentationTerm> terms;
  std::size_t parts = 0;
  // groups with more unit squares than the multiplicity, rewritten by search
  std::size_t regrouped = 0;
};

// alpha = sum coefficient * x^2 over the diagonal universal form, verified.
// CertificateFailure if a group has no short sum of squares.
Representation represent(const DiagonalForm& form, const OrderElement& alpha);

struct WindowReport {
  long trace_bound = 0;
  std::size_t checked = 0;
  std::size_t max_parts = 0;
  std::size_t regrouped = 0;
  std::vector<OrderElement> failures;
};

constexpr long kWindowMaxA = 8;
constexpr long kWindowMaxTrace = 12;

// Every totally positive alpha with Tr(delta alpha) <= trace_bound for the
// family delta is decomposed and represented by the diagonal form.
// GuardExceeded for a > 8 or trace_bound > 12.
WindowReport verify_universality_window(const Field& field, long trace_bound, Exec exec = Exec::Serial);

}  // namespace indec

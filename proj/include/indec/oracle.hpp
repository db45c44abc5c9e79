#pragma once

// Brute-force ground truth. Everything here enumerates lattice points of a
// bounded region described in the Minkowski embedding and decides membership
// exactly; floating point is only used, with outward rounding, to prune.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "indec/codifferent.hpp"
#include "indec/order.hpp"
#include "indec/parallel.hpp"

namespace indec {

using RVec = std::vector<Rat>;

// Real embeddings of a lattice basis b_0..b_{d-1}, d in {2, 3}.
class EmbeddingModel {
 public:
  virtual ~EmbeddingModel() = default;
  virtual int dim() const = 0;
  // E[i][j] encloses sigma_i(b_j); the enclosure width shrinks with `width`.
  virtual std::vector<std::vector<RatInterval>> matrix(const Rat& width) const = 0;
  virtual Rat initial_width() const = 0;
};

std::shared_ptr<const EmbeddingModel> cubic_model(const Field& field);

// For each embedding i an optional lower and upper bound sigma_i(z) with z a
// field element given in the lattice basis, and optionally one exact linear
// equation sum_j c_j x_j = t on the coordinates.
struct Region {
  std::shared_ptr<const EmbeddingModel> model;
  std::vector<std::optional<RVec>> lower;
  std::vector<std::optional<RVec>> upper;
  struct Equation {
    std::vector<Int> c;
    Int t;
  };
  std::optional<Equation> equation;
};

struct CoordBox {
  std::vector<Int> lo, hi;
};

// Integer box containing every lattice point of the region.
CoordBox search_box(const Region& region);

using Point = std::array<std::int64_t, 3>;
using Predicate = std::function<bool(const Point&)>;

struct EnumStats {
  std::uint64_t candidates = 0;
  std::uint64_t hits = 0;
};

// Points of the region accepted by `accept`, in lexicographic order. The
// predicate sees only candidates that may lie in the region; it must decide
// the region's inequalities exactly itself.
std::vector<Point> enumerate_region(const Region& region, const Predicate& accept, Exec exec = Exec::Serial,
                                    EnumStats* stats = nullptr);

// Lexicographically least accepted point.
std::optional<Point> first_in_region(const Region& region, const Predicate& accept, Exec exec = Exec::Serial,
                                     EnumStats* stats = nullptr);

// --- cubic orders -------------------------------------------------------

struct Decomposition {
  OrderElement beta, gamma;
};

// Lexicographically least totally positive beta with alpha - beta totally
// positive, or nothing when alpha is indecomposable.
std::optional<Decomposition> decompose(const OrderElement& alpha, Exec exec = Exec::Serial);

struct MinTrace {
  long t;
  CodifferentElement witness;
};

constexpr long kDefaultTraceCap = 10;

// Smallest t <= t_max with Tr(alpha delta) = t for a totally positive delta in
// the codifferent, with the lexicographically least numerator as witness.
std::optional<MinTrace> min_trace(const OrderElement& alpha, long t_max = kDefaultTraceCap, Exec exec = Exec::Serial);

// All totally positive delta in the codifferent with Tr(alpha delta) = t.
std::vector<CodifferentElement> trace_slice(const OrderElement& alpha, long t, Exec exec = Exec::Serial);

// All totally positive beta with Tr(delta beta) = t for a totally positive
// delta; a finite set, sorted.
std::vector<OrderElement> elements_of_trace(const CodifferentElement& delta, long t, Exec exec = Exec::Serial);

// Lattice points t1 u1 + t2 u2 + t3 u3 with every t_i in [0, 1], sorted.
std::vector<OrderElement> parallelepiped_points(const OrderElement& u1, const OrderElement& u2,
                                                const OrderElement& u3);

// The two fundamental parallelepipeds D(1, e1, e2) and D(1, e1, e1/e2) of the
// family's totally positive unit pair (e1, e2).
std::vector<OrderElement> fundamental_window(const Field& field);

// Indecomposable elements of the window, sorted.
std::vector<OrderElement> indecomposables_by_search(const Field& field, Exec exec = Exec::Serial);

}  // namespace indec

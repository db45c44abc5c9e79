#pragma once

// Counting principal ideals of small norm in the simplest cubic order, and
// the squarefree-norm counts of the indecomposable inventory.

#include <cstdint>
#include <utility>
#include <vector>

#include "indec/families.hpp"
#include "indec/parallel.hpp"

namespace indec {

// N(-w rho + k rho^2) = -w^3 + a k w^2 + a k^2 w + 3 k^2 w + k^3
Int sum_norm(long a, const Int& k, const Int& w);

struct SumPair {
  long k, w;
  friend bool operator==(const SumPair&, const SumPair&) = default;
  friend auto operator<=>(const SumPair&, const SumPair&) = default;
};

struct FastCount {
  // sorted by (k, w)
  std::vector<SumPair> pairs;
  // the largest w with every alpha_0 .. alpha_w of norm <= X (w <= a/2)
  long w_max = 0;
  std::size_t count() const { return pairs.size(); }
};

// Coprime (k, w), k >= 1, 0 <= w <= k w_max, with sum_norm <= X: the elements
// that are sums of k first-row indecomposables alpha_{w_i} of norm <= X.
// Requires 1 <= X <= a^2 (BoundTooLarge above).
FastCount count_fast(long a, long X, bool include_unit = false, Exec exec = Exec::Serial);

// Distinct ideals among the count_fast generators and their Galois conjugates.
std::size_t count_exact(long a, long X, bool include_unit = false, Exec exec = Exec::Serial);

// Every primitive lattice point of norm <= X in the closed fundamental cones
// of the totally positive units, deduplicated by ideal. Guarded to a <= 12.
std::size_t count_bruteforce(long a, long X, bool include_unit = false, Exec exec = Exec::Serial);

// Z[rho] is the full ring of integers: a^2+3a+9 squarefree, or 9 times a
// squarefree number prime to 3.
bool power_basis_is_maximal(long a);

// Inventory records of the simplest cubic field with squarefree norm.
long sq_count(long a);

struct SqRow {
  long a;
  long sq;
  long records;
  bool maximal;
};
std::vector<SqRow> sq_table(long a_min, long a_max, Exec exec = Exec::Serial);

struct MaxNorm {
  TrianglePoint point;
  bool exceptional = false;
  Int norm;
};

// Largest norm over the triangle and the exceptional element; a >= 4.
MaxNorm max_norm_indecomposable(long a);

}  // namespace indec

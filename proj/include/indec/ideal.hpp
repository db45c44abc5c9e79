#pragma once

#include <array>
#include <compare>

#include "indec/order.hpp"

namespace indec {

// Canonical basis of a full-rank sublattice of Z^3: lower triangular, positive
// diagonal, and 0 <= h[i][j] < h[j][j] below the diagonal.
struct IdealHNF {
  std::array<std::array<Int, 3>, 3> h;

  Int determinant() const { return h[0][0] * h[1][1] * h[2][2]; }
  friend bool operator==(const IdealHNF&, const IdealHNF&) = default;
  friend bool operator<(const IdealHNF& x, const IdealHNF& y) { return x.h < y.h; }
};

IdealHNF hnf_of_rows(Matrix3 rows);

// The principal ideal beta Z[rho], from the rows beta, beta rho, beta rho^2.
IdealHNF ideal_hnf(const OrderElement& beta);

// Totally positive x and y differ by a totally positive unit exactly when they
// generate the same ideal.
inline bool associated(const OrderElement& x, const OrderElement& y) { return ideal_hnf(x) == ideal_hnf(y); }

}  // namespace indec

#include "indec/ideal.hpp"

namespace indec {

namespace {

// Row operations so that rows[top] carries gcd of column col over rows
// 0..top and the other rows in that range have a zero there.
void collect_gcd(Matrix3& rows, int top, int col) {
  for (int r = 0; r < top; ++r) {
    if (rows[r][col] == 0) continue;
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[top][col].get_mpz_t(), rows[r][col].get_mpz_t());
    const Int u = rows[top][col] / g, v = rows[r][col] / g;
    for (int j = 0; j < 3; ++j) {
      const Int a = rows[top][j], b = rows[r][j];
      rows[top][j] = s * a + t * b;
      rows[r][j] = u * b - v * a;
    }
  }
  if (rows[top][col] < 0) {
    for (int j = 0; j < 3; ++j) rows[top][j] = -rows[top][j];
  }
}

}  // namespace

IdealHNF hnf_of_rows(Matrix3 rows) {
  collect_gcd(rows, 2, 2);
  collect_gcd(rows, 1, 1);
  collect_gcd(rows, 0, 0);
  for (int i = 0; i < 3; ++i)
    require(rows[i][i] != 0, ErrorKind::DegenerateSpan, "rows do not span a full-rank lattice");
  // reduce below the diagonal, column by column from the right
  for (int i = 1; i < 3; ++i) {
    for (int j = i - 1; j >= 0; --j) {
      const Int q = floor_div(rows[i][j], rows[j][j]);
      if (q == 0) continue;
      for (int k = 0; k <= j; ++k) rows[i][k] -= q * rows[j][k];
    }
  }
  return IdealHNF{rows};
}

IdealHNF ideal_hnf(const OrderElement& beta) {
  require(!beta.is_zero(), ErrorKind::ZeroElement, "ideal of zero");
  const OrderElement rho = OrderElement::rho(beta.field());
  const OrderElement b1 = beta * rho;
  const OrderElement b2 = b1 * rho;
  return hnf_of_rows(Matrix3{beta.coords(), b1.coords(), b2.coords()});
}

}  // namespace indec

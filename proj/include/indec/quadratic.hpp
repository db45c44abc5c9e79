#pragma once

// Real quadratic orders Z[omega_D]: continued fractions of xi_D = -omega_D',
// semiconvergents, trace-one certificates, and a rank-2 enumeration oracle.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "indec/bigint.hpp"
#include "indec/oracle.hpp"
#include "indec/parallel.hpp"

namespace indec {

// omega = sqrt(D) for D = 2, 3 mod 4, (1 + sqrt(D))/2 for D = 1 mod 4.
struct QuadField {
  Int D;
  int mod4 = 0;
  bool one_mod_4() const { return mod4 == 1; }
  Int discriminant() const { return one_mod_4() ? D : 4 * D; }
};

QuadField make_quad_field(const Int& D);

// x + y omega
struct QuadElement {
  Int x, y;
  friend bool operator==(const QuadElement&, const QuadElement&) = default;
  friend bool operator<(const QuadElement& a, const QuadElement& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
  std::string to_string() const;
};

QuadElement add(const QuadElement& a, const QuadElement& b);
QuadElement sub(const QuadElement& a, const QuadElement& b);
QuadElement scale(const Int& k, const QuadElement& a);
QuadElement mul(const QuadField& f, const QuadElement& a, const QuadElement& b);
QuadElement conjugate(const QuadField& f, const QuadElement& a);
Int trace(const QuadField& f, const QuadElement& a);
Int norm(const QuadField& f, const QuadElement& a);
// signs of the two embeddings (omega -> larger root first), each -1, 0 or 1
std::array<int, 2> signature(const QuadField& f, const QuadElement& a);
bool is_totally_positive(const QuadField& f, const QuadElement& a);

// xi_D = [u0; period], purely periodic after u0.
struct CFExpansion {
  QuadField field;
  Int u0;
  std::vector<Int> period;

  long s() const { return static_cast<long>(period.size()); }
  // u_i for i >= 0
  const Int& u(long i) const { return i == 0 ? u0 : period[(i - 1) % s()]; }
};

CFExpansion cf_expand(const Int& D);

// p_i, q_i for -1 <= i <= imax.
struct Convergents {
  std::vector<Int> p_, q_;
  const Int& p(long i) const { return p_.at(i + 1); }
  const Int& q(long i) const { return q_.at(i + 1); }
  long imax() const { return static_cast<long>(p_.size()) - 2; }
};

Convergents convergents(const CFExpansion& cf, long imax);

// alpha_i = p_i + q_i omega
QuadElement convergent(const CFExpansion& cf, long i);
// alpha_i + r alpha_{i+1}, i >= -1, 0 <= r <= u_{i+2}
QuadElement semiconvergent(const CFExpansion& cf, long i, const Int& r);

struct QuadRecord {
  QuadElement element;
  long i;
  long r;
  bool conjugate;
};

// alpha_{i,r} and their conjugates for odd -1 <= i <= L - 3 and
// 0 <= r < u_{i+2}, where L = s for even s and 2s for odd s (one turn of the
// totally positive fundamental unit); only those with norm <= bound.
std::vector<QuadRecord> indecomposables_quadratic(const CFExpansion& cf, const Int& norm_bound);

// The totally positive fundamental unit (alpha_{s-1} or its square).
QuadElement totally_positive_unit(const CFExpansion& cf);

// delta = gamma / sqrt(disc). Tr(alpha delta) is the omega-coordinate of
// alpha gamma, and delta >> 0 iff gamma has signature (+, -).
struct QuadCodifferent {
  QuadElement gamma;
};

Int trace_pairing(const QuadField& f, const QuadCodifferent& d, const QuadElement& a);
bool is_totally_positive(const QuadField& f, const QuadCodifferent& d);

struct TraceOneDelta {
  QuadCodifferent delta;
  // the accepted scaling of gamma relative to -alpha'_{i+1}, and the rejected ones
  std::string scaling;
  std::vector<std::string> rejected;
};

// For odd i >= -1 a delta with Tr(alpha_{i,r} delta) = 1 for every
// 0 <= r <= u_{i+2}. CertificateFailure when no candidate scaling passes.
TraceOneDelta trace_one_delta(const CFExpansion& cf, long i);

struct QuadCounts {
  Int n;
  Int s_count;
  // the closed forms as displayed for comparison, by parity of s
  Int n_display;
  Int s_count_display;
};

QuadCounts quad_counts(const CFExpansion& cf);

// --- oracle ---

std::shared_ptr<const EmbeddingModel> quad_model(const QuadField& f);

// Rows (h00, 0) and (h10, h11) with 0 <= h10 < h00.
struct QuadHNF {
  Int h00, h10, h11;
  friend bool operator==(const QuadHNF&, const QuadHNF&) = default;
  friend bool operator<(const QuadHNF& a, const QuadHNF& b) {
    if (a.h00 != b.h00) return a.h00 < b.h00;
    if (a.h10 != b.h10) return a.h10 < b.h10;
    return a.h11 < b.h11;
  }
};

QuadHNF quad_ideal_hnf(const QuadField& f, const QuadElement& a);

// Lexicographically least totally positive beta with a - beta totally
// positive, or nothing when a is indecomposable.
std::optional<QuadElement> quad_decompose(const QuadField& f, const QuadElement& a, Exec exec = Exec::Serial);

// Indecomposables among the lattice points of the closed parallelogram
// spanned by 1 and the totally positive fundamental unit.
std::vector<QuadElement> quad_indecomposables_by_search(const CFExpansion& cf, Exec exec = Exec::Serial);

}  // namespace indec

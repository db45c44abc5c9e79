#pragma once

// The codifferent of a monogenic order is (1/f'(rho)) Z[rho]; an element is
// stored as its numerator gamma with the denominator f'(rho) implicit.

#include <optional>

#include "indec/order.hpp"

namespace indec {

class CodifferentElement {
 public:
  explicit CodifferentElement(OrderElement numerator) : num_(std::move(numerator)) {}

  const OrderElement& numerator() const { return num_; }
  const Field& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  // delta as an element of Q(rho).
  RatCoords value() const;

  friend bool operator==(const CodifferentElement& x, const CodifferentElement& y) { return x.num_ == y.num_; }

 private:
  OrderElement num_;
};

// f'(rho) = 3 rho^2 + 2 c2 rho + c1.
OrderElement fprime(const Field& field);

// Tr(delta x) through the rational multiplication matrix of
// gamma x f'(rho)^{-1}; throws NonIntegralTrace if the result is not integral.
Int trace_pairing(const CodifferentElement& delta, const OrderElement& x);

// Tr(z / f'(rho)) equals the rho^2 coordinate of z (Euler's identity for the
// power basis). This is the form used inside enumeration loops.
inline const Int& euler_trace(const Coords& z) { return z[2]; }

bool is_totally_positive_codiff(const CodifferentElement& delta);

// delta = y for y in Q(rho) if y lies in the codifferent, i.e. y f'(rho) is
// integral.
std::optional<CodifferentElement> codifferent_from_rational(const Field& field, const RatCoords& y);

// The certificate with Tr(delta (v1 + v2 rho + v3 rho^2)) = v1 + v3 for the
// simplest cubic family. Built from the rationalised display and checked.
CodifferentElement triangle_delta(const Field& field);

// (-(a-1) + (a-1) rho + rho^2) / f'(rho) for the Ennola family.
CodifferentElement ennola_delta(const Field& field);

enum class Monogenicity { CertifiedMonogenic, Unverified };

std::string_view to_string(Monogenicity m);
Monogenicity monogenicity_certificate(const FieldSpec& field);

}  // namespace indec

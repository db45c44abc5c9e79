#include "indec/codifferent.hpp"

#include "indec/factor.hpp"

namespace indec {

OrderElement fprime(const Field& field) {
  return {field, field->c1, 2 * field->c2, 3};
}

RatCoords CodifferentElement::value() const {
  const FieldSpec& f = *field();
  return mul_rat(f, to_rat(num_.coords()), inverse_rat(fprime(field())));
}

Int trace_pairing(const CodifferentElement& delta, const OrderElement& x) {
  check_same_field(delta.numerator(), x);
  const FieldSpec& f = *x.field();
  const Rat t = trace_rat(f, mul_rat(f, delta.value(), to_rat(x.coords())));
  require(t.get_den() == 1, ErrorKind::NonIntegralTrace, "trace " + t.get_str() + " is not an integer");
  return t.get_num();
}

bool is_totally_positive_codiff(const CodifferentElement& delta) {
  require(!delta.is_zero(), ErrorKind::ZeroElement, "total positivity of zero");
  const auto e = sym_funcs_rat(*delta.field(), delta.value());
  return e[0] > 0 && e[1] > 0 && e[2] > 0;
}

std::optional<CodifferentElement> codifferent_from_rational(const Field& field, const RatCoords& y) {
  const RatCoords g = mul_rat(*field, y, to_rat(fprime(field).coords()));
  for (const auto& c : g) {
    if (c.get_den() != 1) return std::nullopt;
  }
  return CodifferentElement(OrderElement(field, g[0].get_num(), g[1].get_num(), g[2].get_num()));
}

CodifferentElement triangle_delta(const Field& field) {
  require(field->family == Family::SimplestCubic, ErrorKind::UnsupportedFamily,
          "the triangle certificate exists for the simplest cubic family only");
  const Int a(field->a);
  const OrderElement p(field, -4 - a, -1 - 2 * a, 2);
  const OrderElement q(field, -(a + 2), -a, 1);
  const Int d = a * a + 3 * a + 9;
  RatCoords y = to_rat((p * q).coords());
  for (auto& c : y) c /= d;
  auto delta = codifferent_from_rational(field, y);
  require(delta.has_value(), ErrorKind::CertificateFailure, "displayed certificate is not in the codifferent");
  const OrderElement rho = OrderElement::rho(field);
  const Int expected[3] = {1, 0, 1};
  OrderElement power = OrderElement::one(field);
  for (int i = 0; i < 3; ++i) {
    require(trace_pairing(*delta, power) == expected[i], ErrorKind::CertificateFailure,
            "certificate trace on rho^" + std::to_string(i) + " differs from v1 + v3");
    power = power * rho;
  }
  return *delta;
}

CodifferentElement ennola_delta(const Field& field) {
  require(field->family == Family::Ennola, ErrorKind::UnsupportedFamily, "Ennola certificate needs the Ennola family");
  const Int a(field->a);
  return CodifferentElement(OrderElement(field, -(a - 1), a - 1, 1));
}

std::string_view to_string(Monogenicity m) {
  return m == Monogenicity::CertifiedMonogenic ? "CertifiedMonogenic" : "Unverified";
}

Monogenicity monogenicity_certificate(const FieldSpec& field) {
  require(field.family == Family::SimplestCubic, ErrorKind::UnsupportedFamily,
          "monogenicity certificate is defined for the simplest cubic family");
  if (field.a == 0) return Monogenicity::CertifiedMonogenic;
  const Int a(field.a);
  return is_squarefree(a * a + 3 * a + 9) ? Monogenicity::CertifiedMonogenic : Monogenicity::Unverified;
}

}  // namespace indec

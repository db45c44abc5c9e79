#pragma once

#include <array>
#include <random>

#include "indec/order.hpp"

namespace testing_support {

using indec::Field;
using indec::OrderElement;

std::mt19937_64& rng();

long rand_int(long lo, long hi);
OrderElement random_element(const Field& f, long bound);

// Conjugates of rho computed in long double by the trigonometric formula,
// ordered by the same convention as the library (independent of it).
std::array<long double, 3> numeric_roots(const indec::FieldSpec& f);
std::array<long double, 3> numeric_embed(const OrderElement& x);

}  // namespace testing_support

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "indec/bigint.hpp"

namespace indec {

// Deterministic for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

// Prime factorisation of |n| (n != 0), primes ascending. Trial division to
// 10^6, then Miller-Rabin and Pollard-Brent on the cofactor.
std::vector<std::pair<Int, unsigned>> factor(const Int& n);

// |n| is squarefree; n = 0 is not.
bool is_squarefree(const Int& n);

}  // namespace indec

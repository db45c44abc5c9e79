#include "indec/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "indec/errors.hpp"

namespace indec {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

constexpr u64 kTrialLimit = 1000000;

std::vector<u64> small_primes() {
  std::vector<bool> sieve(kTrialLimit + 1, true);
  std::vector<u64> ps;
  for (u64 i = 2; i <= kTrialLimit; ++i) {
    if (!sieve[i]) continue;
    ps.push_back(i);
    for (u64 j = i * i; j <= kTrialLimit; j += i) sieve[j] = false;
  }
  return ps;
}

const std::vector<u64>& primes() {
  static const std::vector<u64> ps = small_primes();
  return ps;
}

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, g = 1, q = 1, x = 0, ys = 0;
    const u64 m = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_u64(u64 n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out[Int(static_cast<unsigned long>(n))] += 1;
    return;
  }
  const u64 d = pollard_brent(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

Int pollard_brent_big(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, g = 1;
    auto step = [&](const Int& v) { return Int((v * v + c) % n); };
    while (g == 1) {
      x = step(x);
      y = step(step(y));
      g = igcd(abs(x - y), n);
    }
    if (g != n) return g;
  }
}

void factor_big(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (n.fits_ulong_p()) {
    factor_u64(n.get_ui(), out);
    return;
  }
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    out[n] += 1;
    return;
  }
  const Int d = pollard_brent_big(n);
  factor_big(d, out);
  factor_big(Int(n / d), out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<Int, unsigned>> factor(const Int& n) {
  require(n != 0, ErrorKind::ZeroElement, "factorisation of zero");
  Int m = abs(n);
  std::map<Int, unsigned> out;
  for (u64 p : primes()) {
    if (Int(static_cast<unsigned long>(p)) * p > m) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= static_cast<unsigned long>(p);
      ++e;
    }
    if (e) out[Int(static_cast<unsigned long>(p))] = e;
  }
  factor_big(m, out);
  return {out.begin(), out.end()};
}

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  Int m = abs(n);
  for (u64 p : primes()) {
    const Int pp(static_cast<unsigned long>(p));
    if (pp * pp > m) return true;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= static_cast<unsigned long>(p);
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
    }
  }
  // Every prime factor of m now exceeds 10^6.
  if (m == 1) return true;
  if (mpz_perfect_square_p(m.get_mpz_t())) return false;
  for (const auto& [p, e] : factor(m)) {
    if (e > 1) return false;
  }
  return true;
}

}  // namespace indec

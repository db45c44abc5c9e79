#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace indec {

using Int = mpz_class;
using Rat = mpq_class;

inline bool fits_i64(const Int& x) {
  return mpz_fits_slong_p(x.get_mpz_t()) != 0 && sizeof(long) == 8;
}

inline std::int64_t to_i64(const Int& x) { return static_cast<std::int64_t>(x.get_si()); }

inline Int from_i64(std::int64_t x) { return Int(static_cast<long>(x)); }

inline std::optional<std::int64_t> try_i64(const Int& x) {
  if (!fits_i64(x)) return std::nullopt;
  return to_i64(x);
}

inline Int from_i128(__int128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  Int hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Int lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Int r = (hi << 64) + lo;
  return neg ? Int(-r) : r;
}

inline Int floor_div(const Int& n, const Int& d) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& n, const Int& d) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Int floor_of(const Rat& x) { return floor_div(x.get_num(), x.get_den()); }
inline Int ceil_of(const Rat& x) { return ceil_div(x.get_num(), x.get_den()); }

inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Largest r with r^3 <= n, for n >= 0.
inline Int icbrt(const Int& n) {
  Int r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
  return r;
}

inline Int igcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int ipow(const Int& b, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline int sgn(const Int& x) { return ::sgn(x); }
inline int sgn(const Rat& x) { return ::sgn(x); }

inline std::string str(const Int& x) { return x.get_str(); }
inline std::string str(const Rat& x) { return x.get_str(); }

}  // namespace indec

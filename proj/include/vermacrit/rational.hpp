#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace vermacrit {

// Exact rational scalar used everywhere. mpq_class keeps values canonical
// (reduced, positive denominator), which the hashing below relies on.
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) { return Rat(n, d); }

// Sign picked up when two homogeneous elements swap.
inline int koszul_sign(int p, int q) { return (p & q & 1) ? -1 : 1; }

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }

inline long rat_to_long(const Rat& a) {
  if (a.get_den() != 1) throw std::runtime_error("rat_to_long: not an integer");
  return mpz_get_si(a.get_num().get_mpz_t());
}

inline std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) + 0x9e3779b97f4a7c15ULL;
  const std::size_t n = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

inline std::size_t hash_rat(const Rat& a) {
  std::size_t h = hash_mpz(a.get_num());
  h ^= hash_mpz(a.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

inline std::string rat_str(const Rat& a) { return a.get_str(); }

}  // namespace vermacrit

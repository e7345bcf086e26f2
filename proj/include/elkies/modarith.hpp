#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace elkies::modarith {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;  // a, b < m < 2^63
  return s >= m ? s - m : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }
inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m);

/// Inverse of a modulo m via extended Euclid; nullopt when gcd(a, m) != 1.
std::optional<u64> inv_mod(u64 a, u64 m);

/// Reduce a signed integer into [0, m).
inline u64 reduce(i64 a, u64 m) {
  i64 r = a % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Jacobi symbol (a/n) for odd n > 0.
int jacobi(u64 a, u64 n);

u64 isqrt(u64 n);

/// Prime factors of n with multiplicity, by trial division.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// If n = p^e for a prime p, returns (p, e).
std::optional<std::pair<u64, unsigned>> prime_power(u64 n);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

/// splitmix64 finalizer; used to derive per-item seeds from a global seed.
inline u64 mix64(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
inline u64 derive_seed(u64 global_seed, u64 item) { return mix64(mix64(global_seed) ^ item); }

}  // namespace elkies::modarith

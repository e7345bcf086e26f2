#pragma once

// Reference implementations used only by the tests. They avoid the library
// code paths they check: plain integer arithmetic, direct enumeration.

#include <cstdint>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<u64>(static_cast<unsigned __int128>(r) * b % m);
    b = static_cast<u64>(static_cast<unsigned __int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

inline u64 mod(i64 a, u64 m) {
  i64 r = a % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

// Euler's criterion: 1, -1 or 0 for an odd prime p.
inline int legendre(i64 a, u64 p) {
  u64 v = mod(a, p);
  if (v == 0) return 0;
  return pow_mod(v, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline std::vector<u64> primes_upto(u64 n) {
  std::vector<bool> c(n + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= n; ++i) {
    if (c[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += i) c[j] = true;
  }
  return out;
}

// Polynomials over F_p as coefficient vectors, constant term first.
using IPoly = std::vector<u64>;

inline IPoly trim(IPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline IPoly mul(const IPoly& a, const IPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  IPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return trim(r);
}

// All monic polynomials of degree d over F_p.
inline std::vector<IPoly> monics(u64 p, unsigned d) {
  std::vector<IPoly> out;
  u64 total = 1;
  for (unsigned i = 0; i < d; ++i) total *= p;
  for (u64 code = 0; code < total; ++code) {
    IPoly f(d + 1, 0);
    u64 c = code;
    for (unsigned i = 0; i < d; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[d] = 1;
    out.push_back(f);
  }
  return out;
}

// Monic irreducibles of degree d over F_p: those not hit by any product of
// two monic polynomials of positive degree.
inline std::vector<IPoly> irreducibles(u64 p, unsigned d) {
  std::vector<IPoly> cand = monics(p, d);
  std::vector<bool> reducible(cand.size(), false);
  auto index = [&](const IPoly& f) {
    u64 code = 0;
    for (unsigned i = d; i-- > 0;) code = code * p + f[i];
    return code;
  };
  for (unsigned a = 1; a <= d / 2; ++a) {
    for (const auto& f : monics(p, a)) {
      for (const auto& g : monics(p, d - a)) reducible[index(mul(f, g, p))] = true;
    }
  }
  std::vector<IPoly> out;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (!reducible[i]) out.push_back(cand[i]);
  }
  return out;
}

// Square matrices mod p, row-major.
using IMat = std::vector<u64>;

inline IMat mat_mul(const IMat& a, const IMat& b, std::size_t n, u64 p) {
  IMat r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) r[i * n + j] = (r[i * n + j] + a[i * n + k] * b[k * n + j]) % p;
    }
  }
  return r;
}

inline u64 det(IMat a, std::size_t n, u64 p) {
  u64 d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
      d = (p - d) % p;
    }
    d = d * a[c * n + c] % p;
    u64 inv = pow_mod(a[c * n + c], p - 2, p);
    for (std::size_t r = c + 1; r < n; ++r) {
      u64 f = a[r * n + c] * inv % p;
      for (std::size_t j = c; j < n; ++j) a[r * n + j] = (a[r * n + j] + (p - f) * a[c * n + j]) % p;
    }
  }
  return d;
}

// m^T J m with J = [[0, I], [-I, 0]]; returns lambda if it equals lambda J, else 0.
inline u64 similitude_factor(const IMat& m, std::size_t n, u64 p) {
  const std::size_t h = n / 2;
  IMat j(n * n, 0);
  for (std::size_t i = 0; i < h; ++i) {
    j[i * n + h + i] = 1;
    j[(h + i) * n + i] = p - 1;
  }
  IMat mt(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) mt[r * n + c] = m[c * n + r];
  }
  IMat g = mat_mul(mat_mul(mt, j, n, p), m, n, p);
  u64 lambda = g[h];
  for (std::size_t k = 0; k < n * n; ++k) {
    if (g[k] != j[k] * lambda % p) return 0;
  }
  return lambda;
}

}  // namespace oracle

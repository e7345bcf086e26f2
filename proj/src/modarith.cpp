#include "elkies/modarith.hpp"

#include <numeric>

namespace elkies::modarith {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::optional<u64> inv_mod(u64 a, u64 m) {
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
  while (new_r != 0) {
    i64 quot = r / new_r;
    i64 tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) return std::nullopt;
  return t < 0 ? static_cast<u64>(t + static_cast<i64>(m)) : static_cast<u64>(t);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int jacobi(u64 a, u64 n) {
  a %= n;
  int sign = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      u64 r = n & 7;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) sign = -sign;
    a %= n;
  }
  return n == 1 ? sign : 0;
}

u64 isqrt(u64 n) {
  u64 r = 0;
  for (u64 bit = u64{1} << 62; bit != 0; bit >>= 2) {
    if (n >= r + bit) {
      n -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
  }
  return r;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<std::pair<u64, unsigned>> prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  if (is_prime(n)) return std::make_pair(n, 1u);
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }
u64 lcm(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

}  // namespace elkies::modarith

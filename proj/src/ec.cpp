#include "elkies/ec.hpp"

#include <algorithm>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "elkies/error.hpp"
#include "elkies/modarith.hpp"

namespace elkies::ec {

namespace ma = elkies::modarith;
using BigInt = boost::multiprecision::cpp_int;

namespace {

BigInt discriminant(const GlobalCurve& c) {
  BigInt a1 = c.a1, a2 = c.a2, a3 = c.a3, a4 = c.a4, a6 = c.a6;
  BigInt b2 = a1 * a1 + 4 * a2;
  BigInt b4 = 2 * a4 + a1 * a3;
  BigInt b6 = a3 * a3 + 4 * a6;
  BigInt b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

constexpr u64 kMestreBound = 229;
constexpr u64 kNaiveLimit = 100000;

}  // namespace

GlobalCurve::GlobalCurve(i64 a1_, i64 a2_, i64 a3_, i64 a4_, i64 a6_, std::set<u64> bad)
    : a1(a1_), a2(a2_), a3(a3_), a4(a4_), a6(a6_), bad_primes(std::move(bad)) {
  if (discriminant(*this) == 0) fail(Errc::invalid_argument, "singular Weierstrass model (zero discriminant)");
}

GlobalCurve GlobalCurve::cremona_11a3() { return GlobalCurve(0, -1, 1, 0, 0, {11}); }

u64 GlobalCurve::discriminant_mod(u64 m) const {
  BigInt d = discriminant(*this) % BigInt(m);
  if (d < 0) d += m;
  return d.convert_to<u64>();
}

bool GlobalCurve::good_at(u64 p) const { return !bad_primes.count(p) && discriminant_mod(p) != 0; }

// ---------------------------------------------------------------------------
// Group law

bool on_curve(const CurveFp& e, const Point& pt) {
  if (pt.infinity) return true;
  const u64 p = e.p;
  const u64 x = pt.x, y = pt.y;
  u64 lhs = ma::add_mod(ma::mul_mod(y, y, p), ma::add_mod(ma::mul_mod(ma::mul_mod(e.a1, x, p), y, p), ma::mul_mod(e.a3, y, p), p), p);
  u64 x2 = ma::mul_mod(x, x, p);
  u64 rhs = ma::add_mod(ma::add_mod(ma::mul_mod(x2, x, p), ma::mul_mod(e.a2, x2, p), p),
                        ma::add_mod(ma::mul_mod(e.a4, x, p), e.a6, p), p);
  return lhs == rhs;
}

Point negate(const CurveFp& e, const Point& pt) {
  if (pt.infinity) return pt;
  const u64 p = e.p;
  // -(x, y) = (x, -y - a1 x - a3)
  u64 s = ma::add_mod(pt.y, ma::add_mod(ma::mul_mod(e.a1, pt.x, p), e.a3, p), p);
  return Point::affine(pt.x, ma::sub_mod(0, s, p));
}

Point add(const CurveFp& e, const Point& a, const Point& b) {
  if (a.infinity) return b;
  if (b.infinity) return a;
  const u64 p = e.p;
  u64 lambda;
  if (a.x == b.x) {
    u64 denom = ma::add_mod(ma::add_mod(ma::mul_mod(2, a.y, p), ma::mul_mod(e.a1, a.x, p), p), e.a3, p);
    if (a.y != b.y || denom == 0) return Point::at_infinity();
    // (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3)
    u64 num = ma::mul_mod(3, ma::mul_mod(a.x, a.x, p), p);
    num = ma::add_mod(num, ma::mul_mod(ma::mul_mod(2, e.a2, p), a.x, p), p);
    num = ma::add_mod(num, e.a4, p);
    num = ma::sub_mod(num, ma::mul_mod(e.a1, a.y, p), p);
    lambda = ma::mul_mod(num, *ma::inv_mod(denom, p), p);
  } else {
    lambda = ma::mul_mod(ma::sub_mod(b.y, a.y, p), *ma::inv_mod(ma::sub_mod(b.x, a.x, p), p), p);
  }
  u64 nu = ma::sub_mod(a.y, ma::mul_mod(lambda, a.x, p), p);
  u64 x3 = ma::add_mod(ma::mul_mod(lambda, lambda, p), ma::mul_mod(e.a1, lambda, p), p);
  x3 = ma::sub_mod(x3, ma::add_mod(e.a2, ma::add_mod(a.x, b.x, p), p), p);
  u64 y3 = ma::mul_mod(ma::add_mod(lambda, e.a1, p), x3, p);
  y3 = ma::sub_mod(0, ma::add_mod(y3, ma::add_mod(nu, e.a3, p), p), p);
  return Point::affine(x3, y3);
}

Point scalar_mul(const CurveFp& e, i64 n, const Point& pt) {
  Point base = n < 0 ? negate(e, pt) : pt;
  u64 k = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
  Point acc = Point::at_infinity();
  while (k) {
    if (k & 1) acc = add(e, acc, base);
    base = add(e, base, base);
    k >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Reduction

CurveModP::CurveModP(const GlobalCurve& curve, u64 p) {
  if (p < 5 || !ma::is_prime(p)) fail(Errc::invalid_argument, "reduction needs a prime p >= 5, got " + std::to_string(p));
  if (p >= (u64{1} << 62)) fail(Errc::invalid_argument, "prime too large (must be < 2^62)");
  if (curve.bad_primes.count(p) || curve.discriminant_mod(p) == 0) {
    fail(Errc::bad_reduction, "curve has bad reduction at " + std::to_string(p));
  }
  curve_ = {p, ma::reduce(curve.a1, p), ma::reduce(curve.a2, p), ma::reduce(curve.a3, p), ma::reduce(curve.a4, p),
            ma::reduce(curve.a6, p)};
  const u64 inv2 = *ma::inv_mod(2, p);
  const u64 inv4 = ma::mul_mod(inv2, inv2, p);
  const auto& c = curve_;
  u64 b2 = ma::add_mod(ma::mul_mod(c.a1, c.a1, p), ma::mul_mod(4, c.a2, p), p);
  u64 b4 = ma::add_mod(ma::mul_mod(2, c.a4, p), ma::mul_mod(c.a1, c.a3, p), p);
  u64 b6 = ma::add_mod(ma::mul_mod(c.a3, c.a3, p), ma::mul_mod(4, c.a6, p), p);
  short_ = {p, 0, ma::mul_mod(b2, inv4, p), 0, ma::mul_mod(b4, inv2, p), ma::mul_mod(b6, inv4, p)};
}

std::pair<u64, u64> hasse_interval(u64 p) {
  u64 w = ma::isqrt(4 * p);
  return {p + 1 - w, p + 1 + w};
}

u64 count_points_naive(const CurveModP& curve) {
  const auto& e = curve.curve();
  const u64 p = e.p;
  if (p > kNaiveLimit) fail(Errc::infeasible, "naive point count is limited to p <= 100000");
  u64 n = 1;
  for (u64 x = 0; x < p; ++x) {
    // y^2 + (a1 x + a3) y - (x^3 + a2 x^2 + a4 x + a6) = 0 has 1 + (D/p) roots
    u64 b = ma::add_mod(ma::mul_mod(e.a1, x, p), e.a3, p);
    u64 x2 = ma::mul_mod(x, x, p);
    u64 rhs = ma::add_mod(ma::add_mod(ma::mul_mod(x2, x, p), ma::mul_mod(e.a2, x2, p), p),
                          ma::add_mod(ma::mul_mod(e.a4, x, p), e.a6, p), p);
    u64 disc = ma::add_mod(ma::mul_mod(b, b, p), ma::mul_mod(4, rhs, p), p);
    n += static_cast<u64>(1 + ma::jacobi(disc, p));
  }
  return n;
}

namespace {

// Some M in [lo, hi] with M * P = O, by baby steps j P (1 <= j <= m) and giant
// steps of stride 2m + 1 matched on x-coordinates. Returns 0 if none exists.
u64 bsgs_annihilator(const CurveFp& e, const Point& pt, u64 lo, u64 hi) {
  const u64 width = hi - lo + 1;
  const u64 m = ma::isqrt(width / 2) + 1;
  std::vector<std::pair<u64, u64>> baby;  // (x, j)
  baby.reserve(m);
  Point cur = Point::at_infinity();
  for (u64 j = 1; j <= m; ++j) {
    cur = add(e, cur, pt);
    if (cur.infinity) {
      // j P = O: every multiple of j annihilates; take the first one in range.
      u64 k = (lo + j - 1) / j * j;
      return k <= hi ? k : 0;
    }
    baby.emplace_back(cur.x, j);
  }
  std::sort(baby.begin(), baby.end());
  const u64 stride = 2 * m + 1;
  Point step = scalar_mul(e, static_cast<i64>(stride), pt);
  Point giant = scalar_mul(e, static_cast<i64>(lo + m), pt);
  for (u64 center = lo + m; center <= hi + m; center += stride) {
    if (giant.infinity) return center <= hi ? center : 0;
    auto it = std::lower_bound(baby.begin(), baby.end(), std::make_pair(giant.x, u64{0}));
    if (it != baby.end() && it->first == giant.x) {
      Point jp = scalar_mul(e, static_cast<i64>(it->second), pt);
      u64 mult = jp == giant ? center - it->second : center + it->second;
      if (mult >= lo && mult <= hi) return mult;
    }
    giant = add(e, giant, step);
  }
  return 0;
}

u64 exact_order(const CurveFp& e, const Point& pt, u64 multiple) {
  u64 order = multiple;
  for (const auto& [r, _] : ma::factorize(multiple)) {
    while (order % r == 0 && scalar_mul(e, static_cast<i64>(order / r), pt).infinity) order /= r;
  }
  return order;
}

// Number of N in [lo, hi] with m_curve | N and m_twist | 2p + 2 - N; the last one seen.
std::pair<unsigned, u64> consistent_orders(u64 p, u64 lo, u64 hi, u64 m_curve, u64 m_twist) {
  unsigned count = 0;
  u64 last = 0;
  for (u64 n = (lo + m_curve - 1) / m_curve * m_curve; n <= hi; n += m_curve) {
    if ((2 * p + 2 - n) % m_twist == 0) {
      ++count;
      last = n;
      if (count > 1) break;
    }
  }
  return {count, last};
}

}  // namespace

u64 count_points_bsgs(const CurveModP& curve, u64 seed) {
  const auto& s = curve.short_model();
  const u64 p = s.p;
  const auto [lo, hi] = hasse_interval(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> dist(0, p - 1);
  u64 m_curve = 1, m_twist = 1;
  const int max_rounds = p <= kMestreBound ? 64 : 4096;
  for (int round = 0; round < max_rounds; ++round) {
    const u64 x0 = dist(rng);
    // c = g(x0) with g(x) = x^3 + A x^2 + B x + C
    u64 c = ma::add_mod(ma::mul_mod(ma::add_mod(ma::mul_mod(ma::add_mod(x0, s.a2, p), x0, p), s.a4, p), x0, p), s.a6, p);
    if (c == 0) continue;
    // (c x0, c^2) lies on y^2 = x^3 + cA x^2 + c^2 B x + c^3 C, which is E when c is a
    // square and the quadratic twist otherwise.
    const u64 c2 = ma::mul_mod(c, c, p);
    CurveFp model{p, 0, ma::mul_mod(c, s.a2, p), 0, ma::mul_mod(c2, s.a4, p), ma::mul_mod(ma::mul_mod(c2, c, p), s.a6, p)};
    Point pt = Point::affine(ma::mul_mod(c, x0, p), c2);
    u64 mult = bsgs_annihilator(model, pt, lo, hi);
    if (mult == 0) fail(Errc::internal, "no annihilator in the Hasse interval at p=" + std::to_string(p));
    u64 order = exact_order(model, pt, mult);
    if (ma::jacobi(c, p) == 1)
      m_curve = ma::lcm(m_curve, order);
    else
      m_twist = ma::lcm(m_twist, order);
    auto [count, n] = consistent_orders(p, lo, hi, m_curve, m_twist);
    if (count == 1) return n;
    if (count == 0) fail(Errc::internal, "inconsistent point orders at p=" + std::to_string(p));
  }
  if (p <= kMestreBound) return count_points_naive(curve);
  fail(Errc::internal, "BSGS did not isolate the group order at p=" + std::to_string(p));
}

u64 count_points(const CurveModP& curve, u64 seed) {
  return curve.p() <= kMestreBound ? count_points_naive(curve) : count_points_bsgs(curve, seed);
}

i64 trace_of_frobenius(const CurveModP& curve, u64 seed) {
  return static_cast<i64>(curve.p() + 1) - static_cast<i64>(count_points(curve, seed));
}

// ---------------------------------------------------------------------------
// Elkies primes

bool is_elkies(i64 t, u64 p, u64 ell) {
  if (ell < 3 || !ma::is_prime(ell)) fail(Errc::invalid_argument, "Elkies test needs an odd prime l, got " + std::to_string(ell));
  if (ell == p) fail(Errc::invalid_argument, "Elkies test needs l != p");
  const u64 tr = ma::reduce(t, ell);
  const u64 disc = ma::sub_mod(ma::mul_mod(tr, tr, ell), ma::mul_mod(4, p % ell, ell), ell);
  return ma::jacobi(disc, ell) >= 0;
}

std::vector<u64> elkies_range(const GlobalCurve& curve, u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 l = std::max<u64>(lo, 3); l <= hi; ++l) {
    if (ma::is_prime(l) && !curve.bad_primes.count(l)) out.push_back(l);
  }
  return out;
}

unsigned elkies_count(i64 t, u64 p, std::span<const u64> ells) {
  unsigned n = 0;
  for (u64 l : ells) n += is_elkies(t, p, l) ? 1 : 0;
  return n;
}

unsigned elkies_count(const GlobalCurve& curve, u64 p, u64 L, u64 seed) {
  if (L < 2) fail(Errc::invalid_argument, "L must be >= 2");
  if (p <= 2 * L) fail(Errc::invalid_argument, "elkies_count needs p > 2L");
  CurveModP e(curve, p);
  const i64 t = trace_of_frobenius(e, seed);
  const auto ells = elkies_range(curve, L, 2 * L);
  return elkies_count(t, p, ells);
}

}  // namespace elkies::ec

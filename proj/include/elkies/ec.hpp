#pragma once

// Elliptic curves over Q in long Weierstrass form, their reductions modulo
// good primes, point counting (naive and baby-step giant-step), and the
// Elkies test for a prime l: chi = X^2 - tX + p has a root mod l.

#include <cstdint>
#include <set>
#include <span>
#include <vector>

namespace elkies::ec {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
struct GlobalCurve {
  i64 a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  std::set<u64> bad_primes;

  /// Validates the discriminant.
  GlobalCurve(i64 a1, i64 a2, i64 a3, i64 a4, i64 a6, std::set<u64> bad_primes);

  /// Cremona 11a3: y^2 + y = x^3 - x^2, bad prime 11.
  static GlobalCurve cremona_11a3();

  /// Discriminant modulo m (m > 1).
  u64 discriminant_mod(u64 m) const;
  bool good_at(u64 p) const;
};

/// Long Weierstrass curve over F_p with reduced coefficients.
struct CurveFp {
  u64 p;
  u64 a1, a2, a3, a4, a6;
};

struct Point {
  bool infinity = true;
  u64 x = 0, y = 0;

  static Point at_infinity() { return {}; }
  static Point affine(u64 x, u64 y) { return {false, x, y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

bool on_curve(const CurveFp& e, const Point& pt);
Point negate(const CurveFp& e, const Point& pt);
Point add(const CurveFp& e, const Point& a, const Point& b);
Point scalar_mul(const CurveFp& e, i64 n, const Point& pt);

/// Reduction at a good prime p >= 5.
class CurveModP {
 public:
  /// Throws Errc::bad_reduction for listed bad primes and primes dividing the
  /// discriminant, Errc::invalid_argument for p < 5 or composite p.
  CurveModP(const GlobalCurve& curve, u64 p);

  u64 p() const { return curve_.p; }
  const CurveFp& curve() const { return curve_; }
  /// y^2 = x^3 + A x^2 + B x + C, isomorphic over F_p (completing the square).
  const CurveFp& short_model() const { return short_; }

 private:
  CurveFp curve_;
  CurveFp short_;
};

/// 1 + #affine points, scanning x and solving the quadratic in y. Guard p <= 10^5.
u64 count_points_naive(const CurveModP& curve);

/// Exact #E(F_p) by Mestre's baby-step giant-step method; deterministic given the seed.
/// Primes at or below 229 fall back to the naive count when the order
/// information stays ambiguous.
u64 count_points_bsgs(const CurveModP& curve, u64 seed);

/// Naive for p <= 229, BSGS above.
u64 count_points(const CurveModP& curve, u64 seed);

/// t = p + 1 - #E(F_p)
i64 trace_of_frobenius(const CurveModP& curve, u64 seed);

/// Order of the quadratic twist, 2p + 2 - N.
inline u64 twist_order(u64 p, u64 n) { return 2 * p + 2 - n; }

/// Hasse interval [p + 1 - floor(2 sqrt p), p + 1 + floor(2 sqrt p)].
std::pair<u64, u64> hasse_interval(u64 p);

/// Whether l is an Elkies prime: t^2 - 4p is a square (zero included) mod l.
/// Throws Errc::invalid_argument unless l is an odd prime different from p.
bool is_elkies(i64 t, u64 p, u64 ell);

/// Odd primes of [lo, hi] that are not bad for the curve.
std::vector<u64> elkies_range(const GlobalCurve& curve, u64 lo, u64 hi);

/// #{l in ells : l Elkies for (t, p)}.
unsigned elkies_count(i64 t, u64 p, std::span<const u64> ells);

/// N_e(p, L) over odd good primes l in [L, 2L]. Requires L >= 2 and p > 2L.
unsigned elkies_count(const GlobalCurve& curve, u64 p, u64 L, u64 seed);

}  // namespace elkies::ec

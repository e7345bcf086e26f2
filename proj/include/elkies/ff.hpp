#pragma once

// Finite fields F_{p^e} and dense univariate polynomials over them.
//
// Elements are stored as integer codes: the power-basis coordinates
// (c_0, ..., c_{e-1}) of an element are packed as c_0 + c_1 p + ... +
// c_{e-1} p^{e-1}, so the codes of F_q are exactly 0..q-1. Code 0 is zero and
// code 1 is one. Fields of order at most 256 carry lookup tables.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace elkies::ff {

using BigInt = boost::multiprecision::cpp_int;
using Elem = std::uint64_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// F_{p^e} with the lexicographically least monic irreducible modulus
  /// (coefficients compared constant term first).
  static FieldPtr make(std::uint64_t p, unsigned e = 1);
  /// F_{p^e} with an explicit monic modulus, constant term first; checked irreducible.
  static FieldPtr make(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint64_t order() const { return q_; }
  /// Monic modulus over F_p, constant term first, length degree()+1.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  Elem from_int(std::int64_t v) const;
  Elem from_coords(std::span<const std::uint64_t> coords) const;
  std::vector<std::uint64_t> coords(Elem a) const;
  bool valid(Elem a) const { return a < q_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws Errc::domain on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t n) const;
  Elem pow(Elem a, const BigInt& n) const;
  /// The unique b with b^p = a.
  Elem pth_root(Elem a) const;
  bool is_square(Elem a) const;

  /// "q=<p>^<e>;modulus=<c0,...,ce>"
  std::string header() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint64_t p, std::vector<std::uint64_t> modulus);
  Elem mul_slow(Elem a, Elem b) const;
  Elem inv_slow(Elem a) const;

  std::uint64_t p_;
  unsigned e_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint16_t> add_table_, mul_table_, inv_table_;
};

/// Element bound to its field; arithmetic between different fields throws
/// Errc::context_mismatch.
class Fq {
 public:
  Fq(FieldPtr field, Elem code);
  const FieldPtr& field() const { return field_; }
  Elem code() const { return code_; }
  std::vector<std::uint64_t> coords() const { return field_->coords(code_); }
  bool is_zero() const { return code_ == 0; }

  Fq inv() const;
  friend Fq operator+(const Fq& a, const Fq& b);
  friend Fq operator-(const Fq& a, const Fq& b);
  friend Fq operator*(const Fq& a, const Fq& b);
  friend Fq operator/(const Fq& a, const Fq& b);
  Fq operator-() const;
  friend bool operator==(const Fq& a, const Fq& b);

 private:
  FieldPtr field_;
  Elem code_;
};

/// Dense polynomial, constant term first, no trailing zeros.
class Poly {
 public:
  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Elem> coeffs);
  static Poly constant(FieldPtr field, Elem c);
  static Poly x(FieldPtr field);
  static Poly monomial(FieldPtr field, Elem c, std::size_t degree);
  /// X - a
  static Poly linear(FieldPtr field, Elem a);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  Poly monic() const;
  Poly derivative() const;
  Elem eval(Elem x) const;
  Poly scaled(Elem c) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  /// Degree first, then coefficients from the top down.
  friend bool operator<(const Poly& a, const Poly& b);

  /// Quotient and remainder; throws Errc::domain for a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

 private:
  void trim();
  void check_same(const Poly& other) const;

  FieldPtr field_;
  std::vector<Elem> c_;
};

/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, const BigInt& exponent, const Poly& modulus);
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);

struct Factor {
  Poly poly;
  unsigned multiplicity;
};

struct Factorization {
  Elem unit;  // leading coefficient of the input
  std::vector<Factor> factors;  // monic irreducible, sorted by operator<
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed5eedULL;

/// Squarefree decomposition, distinct-degree and equal-degree splitting.
/// Throws Errc::domain on the zero polynomial.
Factorization factor(const Poly& p, std::uint64_t seed = kDefaultFactorSeed);

/// gcd(P, P') is constant. Throws Errc::domain on the zero polynomial.
bool is_separable(const Poly& p);

/// Rabin's test.
bool is_irreducible(const Poly& p);

/// (1/a0) X^r P(lambda0 / X) for monic P of degree r with constant term a0 != 0.
Poly lambda_reciprocal(const Poly& p, Elem lambda0);

/// Number of monic irreducibles of degree d over F_q: (1/d) sum_{e|d} mu(d/e) q^e.
BigInt count_irreducibles(std::uint64_t q, unsigned d);

/// All monic irreducibles of degree d, in operator< order. Guarded by q^d <= 10^7.
std::vector<Poly> monic_irreducibles(const FieldPtr& field, unsigned d);

/// Deterministic given the seed.
Poly random_irreducible(const FieldPtr& field, unsigned d, std::uint64_t seed);

/// "q=<p>^<e>;modulus=<...>;coeffs=<c0,c1,...>"; coefficients are element codes.
std::string serialize(const Poly& p);
/// Inverse of serialize(). The field is rebuilt from the header.
Poly parse_poly(const std::string& text);

}  // namespace elkies::ff

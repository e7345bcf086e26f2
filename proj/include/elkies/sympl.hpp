#pragma once

// The general symplectic group GSp_{2h}(F_q) with respect to
// J = [[0, I_h], [-I_h, 0]], split elements (those stabilising a Lagrangian
// subspace), and exact and asymptotic counts of the split locus.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "elkies/comb.hpp"
#include "elkies/ff.hpp"

namespace elkies::sympl {

using ff::Elem;
using ff::FieldPtr;
using ff::Poly;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Square matrix over F_q, row-major element codes.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t n);
  Matrix(FieldPtr field, std::size_t n, std::vector<Elem> entries);
  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix scalar(FieldPtr field, std::size_t n, Elem a);
  /// J_{2h}
  static Matrix standard_form(FieldPtr field, unsigned h);

  const FieldPtr& field() const { return field_; }
  std::size_t size() const { return n_; }
  Elem operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const std::vector<Elem>& entries() const { return a_; }

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<Elem> a_;
};

/// lambda(m) if m^T J m = lambda J with lambda != 0, otherwise nullopt.
/// Throws Errc::invalid_argument when m is not square of even size.
std::optional<Elem> multiplier(const Matrix& m);

/// Characteristic polynomial det(X - m), via Hessenberg reduction.
Poly char_poly(const Matrix& m);

/// An element of GSp_{2h}(F_q) together with its multiplier.
class SymplecticMatrix {
 public:
  /// nullopt when m is not a symplectic similitude.
  static std::optional<SymplecticMatrix> from_matrix(Matrix m);
  /// Throws Errc::domain when m is not a symplectic similitude.
  static SymplecticMatrix checked(Matrix m);

  const Matrix& matrix() const { return m_; }
  const FieldPtr& field() const { return m_.field(); }
  unsigned half_dim() const { return static_cast<unsigned>(m_.size() / 2); }
  Elem multiplier() const { return lambda_; }
  Poly char_poly() const { return sympl::char_poly(m_); }

 private:
  SymplecticMatrix(Matrix m, Elem lambda) : m_(std::move(m)), lambda_(lambda) {}
  Matrix m_;
  Elem lambda_;
};

/// psi(u, v) = u^T J v
Elem symplectic_pairing(const ff::Field& f, std::span<const Elem> u, std::span<const Elem> v);

/// Every Lagrangian (h-dimensional totally isotropic) subspace of F_q^{2h},
/// each stored once by its reduced row-echelon basis.
class LagrangianSet {
 public:
  static constexpr double kMaxSubspaces = 1e7;

  /// Throws Errc::infeasible when the number of h-dimensional subspaces
  /// exceeds kMaxSubspaces.
  LagrangianSet(FieldPtr field, unsigned h);

  /// Gaussian binomial [2h choose h]_q as a floating estimate.
  static double subspace_count(std::uint64_t q, unsigned h);

  std::size_t size() const { return pivots_.size(); }
  unsigned half_dim() const { return h_; }
  const FieldPtr& field() const { return field_; }
  /// Row-major h x 2h basis of the i-th subspace.
  std::span<const Elem> basis(std::size_t i) const;

  /// Whether m stabilises at least one subspace of the set.
  bool any_stable(const Matrix& m) const;
  /// Whether m stabilises subspace i.
  bool stable(const Matrix& m, std::size_t i) const;

 private:
  FieldPtr field_;
  unsigned h_;
  std::vector<std::vector<unsigned>> pivots_;
  std::vector<Elem> bases_;
};

/// Does m stabilise some Lagrangian subspace? Exhaustive over all Lagrangians.
bool is_split_bruteforce(const SymplecticMatrix& m);
bool is_split_bruteforce(const SymplecticMatrix& m, const LagrangianSet& lagrangians);

enum class SplitVerdict { not_split, split, unknown };

/// Decides splitness from the factorisation of chi_m when chi_m is separable,
/// or when h <= 2 regardless of separability; otherwise unknown.
SplitVerdict is_split_charpoly(const SymplecticMatrix& m);
/// Same test on an explicit characteristic polynomial of degree 2h.
SplitVerdict split_verdict(const Poly& chi, Elem lambda0, unsigned h);
/// Whether the irreducible factors of chi pair up as {Q, Q~^lambda0}.
bool factors_pair_up(const Poly& chi, Elem lambda0);

/// Companion matrix c_P of a monic P.
Matrix companion(const Poly& p);

/// Diag(c_{P_1}, ..., c_{P_r}, lambda0 c_{P_1}^{-T}, ..., lambda0 c_{P_r}^{-T}).
/// Throws Errc::domain on a zero constant term and Errc::invalid_argument on
/// an empty or non-monic factor list.
SymplecticMatrix companion_block(std::span<const Poly> factors, Elem lambda0);

/// (q - 1) prod (q^{d_i} - 1)
BigInt centralizer_order_split_separable(const comb::Partition& partition, std::uint64_t q);

struct SplitTupleCount {
  BigInt tuples;   // #I: ordered tuples (P_1..P_r) with the full product separable
  BigInt classes;  // #D = #I / (2^r prod_k #{j : d_j = k}!)
};

/// Exhaustive count of I_{(d_1..d_r)}(lambda0) and the induced class count.
/// Irreducibles with zero constant term have no reciprocal and are skipped.
/// Guard: q^{max d_i} <= 10^7.
SplitTupleCount count_split_tuples(const comb::Partition& partition, const FieldPtr& field, Elem lambda0);

struct CensusRow {
  std::uint64_t q;
  unsigned h;
  Elem lambda0;
  std::uint64_t split_sep;
  std::uint64_t split_insep;
  std::uint64_t total;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Enumeration of GSp_{2h}(F_q; {lambda0}). Shard s of n visits the elements
/// whose first basis-image index is congruent to s mod n; the union over all
/// shards is the whole fiber, each element once.
class GroupEnumerator {
 public:
  enum class Method { matrix_scan, symplectic_basis };

  /// matrix_scan is only available for h = 1.
  GroupEnumerator(FieldPtr field, unsigned h, Method method = Method::symplectic_basis);

  /// Guard on the Sp order.
  static constexpr double kMaxElements = 1e8;

  void for_each(Elem lambda0, unsigned shard, unsigned shards, const std::function<void(const Matrix&)>& visit) const;

  /// Uniformly random element of multiplier lambda0.
  Matrix random(Elem lambda0, std::mt19937_64& rng) const;

 private:
  FieldPtr field_;
  unsigned h_;
  Method method_;
};

/// Exact census of split elements by multiplier. With lambda0 unset every
/// multiplier in F_q^x gets a row. Shards run on worker threads; the result
/// does not depend on the shard count.
std::vector<CensusRow> count_split_exhaustive(const FieldPtr& field, unsigned h, std::optional<Elem> lambda0 = {},
                                              unsigned shards = 1);

/// "# field: <header>" then `q,h,lambda0,split_sep,split_insep,total` rows.
std::string census_csv(std::span<const CensusRow> rows, const ff::Field& field);

/// (3l^3 + 7l^2 + 7l + 11)(l + 1)(l - 1)^3 l^4 / 8 for an odd prime l, summed over all multipliers.
BigInt count_split_gsp4_formula(std::uint64_t ell);

/// alpha_h q^{f(h) - 1}
Rational count_split_asymptotic(std::uint64_t q, unsigned h);

}  // namespace elkies::sympl

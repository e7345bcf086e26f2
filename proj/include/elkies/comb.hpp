#pragma once

// Exact combinatorial constants: partitions, the split density alpha_h,
// symplectic group orders, Gaussian moments and pairing counts.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace elkies::comb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Non-decreasing parts d_1 <= ... <= d_r.
struct Partition {
  std::vector<unsigned> parts;

  unsigned total() const;
  std::size_t length() const { return parts.size(); }
  /// prod_k #{j : d_j = k}!
  BigInt multiplicity_factorials() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of h, lexicographic on the sorted tuples.
std::vector<Partition> partitions(unsigned h);

/// sum over partitions of 2^{-r} prod 1/d_i prod_k 1/#{j : d_j = k}!
Rational alpha(unsigned h);

/// 2h^2 + h + 1
std::uint64_t f(unsigned h);

/// q^{h^2} prod_{i=1}^h (q^{2i} - 1)
BigInt sp_order(std::uint64_t q, unsigned h);
/// (q - 1) * sp_order(q, h)
BigInt gsp_order(std::uint64_t q, unsigned h);

/// (k-1)!! for even k, 0 for odd k; m_0 = 1.
BigInt gauss_moment(unsigned k);

/// nu! * (2nu - 1)!!: ordered tuples of disjoint pairs covering {1..2nu}.
BigInt pairing_count(unsigned nu);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

/// "num/den" (or just "num" when the denominator is 1).
std::string to_string(const Rational& r);
double to_double(const Rational& r);

}  // namespace elkies::comb

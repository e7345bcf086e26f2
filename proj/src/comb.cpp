#include "elkies/comb.hpp"

#include <map>

#include "elkies/error.hpp"

namespace elkies::comb {

unsigned Partition::total() const {
  unsigned s = 0;
  for (auto d : parts) s += d;
  return s;
}

BigInt Partition::multiplicity_factorials() const {
  std::map<unsigned, unsigned> counts;
  for (auto d : parts) ++counts[d];
  BigInt out = 1;
  for (const auto& [_, c] : counts) out *= factorial(c);
  return out;
}

namespace {
void extend(unsigned remaining, unsigned min_part, std::vector<unsigned>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back({cur});
    return;
  }
  for (unsigned d = min_part; d <= remaining; ++d) {
    cur.push_back(d);
    extend(remaining - d, d, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions(unsigned h) {
  if (h < 1) fail(Errc::invalid_argument, "partitions: h must be >= 1");
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  // Depth-first with increasing parts emits sorted tuples in lexicographic order.
  extend(h, 1, cur, out);
  return out;
}

Rational alpha(unsigned h) {
  if (h < 1) fail(Errc::invalid_argument, "alpha: h must be >= 1");
  Rational sum = 0;
  for (const auto& part : partitions(h)) {
    BigInt den = BigInt(1) << part.length();
    for (auto d : part.parts) den *= d;
    den *= part.multiplicity_factorials();
    sum += Rational(1, den);
  }
  return sum;
}

std::uint64_t f(unsigned h) { return 2ULL * h * h + h + 1; }

BigInt sp_order(std::uint64_t q, unsigned h) {
  if (q < 2) fail(Errc::invalid_argument, "sp_order: q must be >= 2");
  BigInt bq = q;
  BigInt out = boost::multiprecision::pow(bq, h * h);
  for (unsigned i = 1; i <= h; ++i) out *= boost::multiprecision::pow(bq, 2 * i) - 1;
  return out;
}

BigInt gsp_order(std::uint64_t q, unsigned h) { return (BigInt(q) - 1) * sp_order(q, h); }

BigInt gauss_moment(unsigned k) {
  if (k % 2) return 0;
  BigInt out = 1;
  for (unsigned j = k; j >= 3; j -= 2) out *= j - 1;
  return out;
}

BigInt pairing_count(unsigned nu) {
  if (nu < 1) fail(Errc::invalid_argument, "pairing_count: nu must be >= 1");
  return factorial(nu) * gauss_moment(2 * nu);
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace elkies::comb

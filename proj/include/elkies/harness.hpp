#pragma once

// Experiment engine: segmented prime sieving, the (P, L) sweep of Elkies
// counts N_e(p, L) over p in [P, 2P], standardized moments, the binomial
// reference model, and CSV / JSON / SVG emission.

#include <cstdint>
#include <iterator>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "elkies/ec.hpp"

namespace elkies::harness {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr u64 kSieveLimit = u64{1} << 40;

/// The primes of [lo, hi], produced one segment at a time. Memory is
/// O(sqrt(hi) + segment).
class PrimeRange {
 public:
  PrimeRange(u64 lo, u64 hi, u64 segment_size = u64{1} << 16);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = u64;
    using difference_type = std::ptrdiff_t;
    using pointer = const u64*;
    using reference = const u64&;

    iterator() = default;
    const u64& operator*() const { return buffer_[pos_]; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class PrimeRange;
    explicit iterator(const PrimeRange* range);
    void fill();

    const PrimeRange* range_ = nullptr;
    u64 next_lo_ = 0;
    std::vector<u64> buffer_;
    std::size_t pos_ = 0;
    bool done_ = true;
  };

  iterator begin() const { return iterator(this); }
  iterator end() const { return iterator(); }

  u64 lo() const { return lo_; }
  u64 hi() const { return hi_; }
  std::vector<u64> to_vector() const;
  u64 count() const;

 private:
  u64 lo_, hi_, segment_;
  std::vector<u64> base_primes_;  // primes <= sqrt(hi)
};

/// Throws Errc::invalid_argument unless 2 <= lo <= hi <= 2^40.
PrimeRange sieve(u64 lo, u64 hi);

struct SweepConfig {
  ec::GlobalCurve curve = ec::GlobalCurve::cremona_11a3();
  u64 P = 100000;
  u64 L = 100;
  std::vector<unsigned> moment_orders{1, 2, 3, 4};
  u64 seed = 42;
  unsigned shards = 1;
  /// Keep one record per prime, with the delta sum materialised term by term.
  bool keep_per_prime = false;

  /// Throws Errc::invalid_argument unless L >= 3, P > 2L and 2P fits the sieve.
  void validate() const;
};

/// mu = alpha n, sigma = sqrt(alpha (1 - alpha) n) for n admissible primes l.
struct StandardizedStatistic {
  unsigned n_primes_ell = 0;
  Rational alpha;
  Rational mu;
  Rational variance;
  double sigma = 0;

  StandardizedStatistic() = default;
  StandardizedStatistic(unsigned n, const Rational& alpha);
  double operator()(unsigned ne) const;
};

struct PrimeRecord {
  u64 p;
  i64 trace;
  unsigned ne;
  double delta_sum;  // sum over l of (1 - alpha) if Elkies, -alpha otherwise

  friend bool operator==(const PrimeRecord&, const PrimeRecord&) = default;
};

struct MomentRow {
  unsigned k;
  double empirical;
  double gaussian;
  double abs_diff;

  friend bool operator==(const MomentRow&, const MomentRow&) = default;
};

struct BinomialModel {
  unsigned n = 0;
  double mean = 0;
  double sd = 0;
  std::vector<Rational> pmf;  // C(n, j) / 2^n
};

/// Streaming accumulator: histogram of N_e plus exact power sums. Merge is
/// associative and commutative.
class Accumulator {
 public:
  Accumulator(unsigned n_primes_ell, unsigned max_order);
  void add(unsigned ne);
  void merge(const Accumulator& other);

  u64 population() const { return population_; }
  const std::vector<u64>& histogram() const { return histogram_; }
  /// sum of N_e^j for j = 0..max_order
  const std::vector<BigInt>& power_sums() const { return power_sums_; }

 private:
  u64 population_ = 0;
  std::vector<u64> histogram_;
  std::vector<BigInt> power_sums_;
};

struct ExperimentReport {
  SweepConfig config;
  std::vector<u64> ells;
  StandardizedStatistic stat;
  u64 population = 0;     // good primes in [P, 2P]
  u64 primes_in_range = 0;
  std::vector<u64> histogram;  // index N_e, length n_primes_ell + 1
  std::vector<BigInt> power_sums;
  std::vector<MomentRow> moments;
  double sample_mean = 0;
  double sample_variance = 0;  // population variance of N_e
  double wall_seconds = 0;
  std::vector<PrimeRecord> per_prime;

  /// population * C(n, j) alpha^j (1 - alpha)^{n - j}
  double model_count(unsigned ne) const;
};

bool operator==(const ExperimentReport& a, const ExperimentReport& b);

/// Builds a report from an accumulator; fills moments for config.moment_orders.
ExperimentReport make_report(const SweepConfig& config, std::vector<u64> ells, const Accumulator& acc);

/// Runs the sweep. Output is independent of the shard count.
ExperimentReport sweep(const SweepConfig& config);

/// E[X^k] against the Gaussian m_k, from the report's power sums in extended
/// precision. Throws Errc::domain on an empty population.
std::vector<MomentRow> moments(const ExperimentReport& report, std::span<const unsigned> orders);

/// Two-pass reference: mean of x^k over stored values.
double raw_moment(std::span<const double> values, unsigned k);

/// Binomial reference B(n, 1/2) where n counts the odd primes of [L, 2L] not in `excluded`.
BinomialModel binomial_model(u64 L, const std::set<u64>& excluded);

struct ChiSquare {
  double statistic = 0;
  unsigned dof = 0;
  double p_value = 1;
  unsigned buckets = 0;
};

/// Pearson test of the histogram against the binomial model over the buckets
/// with expected count >= min_expected; expected counts are rescaled to the
/// observed total within those buckets.
ChiSquare chi_square_vs_binomial(const ExperimentReport& report, double min_expected = 10.0);

std::string to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const std::string& text);
std::string to_csv(const ExperimentReport& report);
/// 800x600 bar chart with a Gaussian overlay.
std::string to_svg(const ExperimentReport& report);

/// Write helpers; throw Errc::io.
void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace elkies::harness

#include "elkies/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include "json.hpp"

#include "elkies/comb.hpp"
#include "elkies/error.hpp"
#include "elkies/modarith.hpp"

namespace elkies::harness {

namespace ma = elkies::modarith;
using Float = boost::multiprecision::cpp_bin_float_50;
using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Sieve

PrimeRange::PrimeRange(u64 lo, u64 hi, u64 segment_size) : lo_(lo), hi_(hi), segment_(segment_size) {
  if (lo < 2 || lo > hi) fail(Errc::invalid_argument, "sieve range must satisfy 2 <= lo <= hi");
  if (hi > kSieveLimit) fail(Errc::invalid_argument, "sieve range exceeds 2^40");
  if (segment_ == 0) fail(Errc::invalid_argument, "segment size must be positive");
  const u64 root = ma::isqrt(hi);
  std::vector<bool> composite(root + 1, false);
  for (u64 i = 2; i <= root; ++i) {
    if (composite[i]) continue;
    base_primes_.push_back(i);
    for (u64 j = i * i; j <= root; j += i) composite[j] = true;
  }
}

PrimeRange::iterator::iterator(const PrimeRange* range) : range_(range), next_lo_(range->lo_), done_(false) { fill(); }

void PrimeRange::iterator::fill() {
  buffer_.clear();
  pos_ = 0;
  std::vector<bool> composite;
  while (buffer_.empty()) {
    if (next_lo_ > range_->hi_) {
      done_ = true;
      return;
    }
    const u64 a = next_lo_;
    const u64 b = std::min(range_->hi_, a + range_->segment_ - 1);
    composite.assign(b - a + 1, false);
    for (u64 q : range_->base_primes_) {
      if (q * q > b) break;
      u64 start = std::max(q * q, (a + q - 1) / q * q);
      for (u64 j = start; j <= b; j += q) composite[j - a] = true;
    }
    for (u64 v = a; v <= b; ++v) {
      if (!composite[v - a]) buffer_.push_back(v);
    }
    next_lo_ = b + 1;
  }
}

PrimeRange::iterator& PrimeRange::iterator::operator++() {
  if (++pos_ == buffer_.size()) fill();
  return *this;
}

std::vector<u64> PrimeRange::to_vector() const { return std::vector<u64>(begin(), end()); }

u64 PrimeRange::count() const {
  u64 n = 0;
  for (auto it = begin(); it != end(); ++it) ++n;
  return n;
}

PrimeRange sieve(u64 lo, u64 hi) { return PrimeRange(lo, hi); }

// ---------------------------------------------------------------------------
// Statistics

void SweepConfig::validate() const {
  if (L < 3) fail(Errc::invalid_argument, "L must be >= 3");
  if (P <= 2 * L) fail(Errc::invalid_argument, "P must exceed 2L");
  if (2 * P > kSieveLimit) fail(Errc::invalid_argument, "2P exceeds the sieve limit");
  if (shards == 0) fail(Errc::invalid_argument, "shard count must be >= 1");
  for (auto k : moment_orders) {
    if (k < 1 || k > 32) fail(Errc::invalid_argument, "moment orders must lie in [1, 32]");
  }
}

StandardizedStatistic::StandardizedStatistic(unsigned n, const Rational& a)
    : n_primes_ell(n), alpha(a), mu(a * n), variance(a * (1 - a) * n) {
  if (n == 0) fail(Errc::invalid_argument, "no admissible primes l in [L, 2L]");
  sigma = std::sqrt(variance.convert_to<double>());
}

double StandardizedStatistic::operator()(unsigned ne) const {
  return (static_cast<double>(ne) - mu.convert_to<double>()) / sigma;
}

Accumulator::Accumulator(unsigned n_primes_ell, unsigned max_order)
    : histogram_(n_primes_ell + 1, 0), power_sums_(max_order + 1, 0) {}

void Accumulator::add(unsigned ne) {
  if (ne >= histogram_.size()) fail(Errc::internal, "Elkies count outside histogram support");
  ++population_;
  ++histogram_[ne];
  BigInt pw = 1;
  for (auto& s : power_sums_) {
    s += pw;
    pw *= ne;
  }
}

void Accumulator::merge(const Accumulator& other) {
  if (other.histogram_.size() != histogram_.size() || other.power_sums_.size() != power_sums_.size()) {
    fail(Errc::internal, "merging incompatible accumulators");
  }
  population_ += other.population_;
  for (std::size_t i = 0; i < histogram_.size(); ++i) histogram_[i] += other.histogram_[i];
  for (std::size_t i = 0; i < power_sums_.size(); ++i) power_sums_[i] += other.power_sums_[i];
}

double ExperimentReport::model_count(unsigned ne) const {
  const unsigned n = stat.n_primes_ell;
  if (ne > n) return 0;
  Rational pr = Rational(comb::binomial(n, ne));
  for (unsigned i = 0; i < ne; ++i) pr *= stat.alpha;
  for (unsigned i = ne; i < n; ++i) pr *= 1 - stat.alpha;
  return (pr * population).convert_to<double>();
}

namespace {

bool same_curve(const ec::GlobalCurve& a, const ec::GlobalCurve& b) {
  return a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3 && a.a4 == b.a4 && a.a6 == b.a6 && a.bad_primes == b.bad_primes;
}

bool same_config(const SweepConfig& a, const SweepConfig& b) {
  return same_curve(a.curve, b.curve) && a.P == b.P && a.L == b.L && a.moment_orders == b.moment_orders &&
         a.seed == b.seed && a.shards == b.shards && a.keep_per_prime == b.keep_per_prime;
}

}  // namespace

bool operator==(const ExperimentReport& a, const ExperimentReport& b) {
  return same_config(a.config, b.config) && a.ells == b.ells && a.stat.n_primes_ell == b.stat.n_primes_ell &&
         a.stat.alpha == b.stat.alpha && a.stat.mu == b.stat.mu && a.stat.variance == b.stat.variance &&
         a.stat.sigma == b.stat.sigma && a.population == b.population && a.primes_in_range == b.primes_in_range &&
         a.histogram == b.histogram && a.power_sums == b.power_sums && a.moments == b.moments &&
         a.sample_mean == b.sample_mean && a.sample_variance == b.sample_variance && a.wall_seconds == b.wall_seconds &&
         a.per_prime == b.per_prime;
}

std::vector<MomentRow> moments(const ExperimentReport& report, std::span<const unsigned> orders) {
  const u64 m = report.population;
  if (m == 0) fail(Errc::domain, "moments of an empty population");
  const auto& s = report.power_sums;
  const Rational& mu = report.stat.mu;
  const Float var = Float(report.stat.variance);
  std::vector<MomentRow> out;
  for (unsigned k : orders) {
    if (k >= s.size()) fail(Errc::invalid_argument, "moment order exceeds the accumulated power sums");
    // E[(N - mu)^k] = sum_j C(k, j) E[N^j] (-mu)^{k-j}, exactly.
    Rational central = 0;
    Rational neg_mu_pow = 1;
    for (unsigned j = k + 1; j-- > 0;) {
      central += Rational(comb::binomial(k, j)) * Rational(s[j], m) * neg_mu_pow;
      neg_mu_pow *= -mu;
    }
    Float value = Float(central) / boost::multiprecision::pow(var, Float(k) / 2);
    double emp = value.convert_to<double>();
    double gauss = comb::gauss_moment(k).convert_to<double>();
    out.push_back({k, emp, gauss, std::abs(emp - gauss)});
  }
  return out;
}

double raw_moment(std::span<const double> values, unsigned k) {
  if (values.empty()) fail(Errc::domain, "moments of an empty population");
  long double acc = 0;
  for (double x : values) acc += std::pow(static_cast<long double>(x), static_cast<int>(k));
  return static_cast<double>(acc / values.size());
}

ExperimentReport make_report(const SweepConfig& config, std::vector<u64> ells, const Accumulator& acc) {
  ExperimentReport r;
  r.config = config;
  r.stat = StandardizedStatistic(static_cast<unsigned>(ells.size()), comb::alpha(1));
  r.ells = std::move(ells);
  r.population = acc.population();
  r.histogram = acc.histogram();
  r.power_sums = acc.power_sums();
  if (r.population > 0) {
    Rational mean(r.power_sums[1], r.population);
    Rational second(r.power_sums[2], r.population);
    r.sample_mean = mean.convert_to<double>();
    r.sample_variance = Rational(second - mean * mean).convert_to<double>();
    r.moments = moments(r, config.moment_orders);
  }
  return r;
}

ExperimentReport sweep(const SweepConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  auto ells = ec::elkies_range(config.curve, config.L, 2 * config.L);
  const StandardizedStatistic stat(static_cast<unsigned>(ells.size()), comb::alpha(1));
  const double alpha = stat.alpha.convert_to<double>();
  unsigned max_order = 2;
  for (auto k : config.moment_orders) max_order = std::max(max_order, k);

  const u64 lo = config.P, hi = 2 * config.P;
  const unsigned shards = config.shards;
  const u64 span = (hi - lo + 1 + shards - 1) / shards;

  struct Partial {
    Accumulator acc;
    u64 primes = 0;
    std::vector<PrimeRecord> records;
  };
  std::vector<Partial> parts;
  for (unsigned s = 0; s < shards; ++s) parts.push_back({Accumulator(stat.n_primes_ell, max_order), 0, {}});
  std::vector<std::exception_ptr> errors(shards);

  auto work = [&](unsigned s) {
    try {
      const u64 a = lo + s * span;
      if (a > hi) return;
      const u64 b = std::min(hi, a + span - 1);
      auto& part = parts[s];
      for (u64 p : PrimeRange(a, b)) {
        ++part.primes;
        if (!config.curve.good_at(p)) continue;
        ec::CurveModP e(config.curve, p);
        const i64 t = ec::trace_of_frobenius(e, ma::derive_seed(config.seed, p));
        unsigned ne = 0;
        double delta = 0;
        for (u64 l : ells) {
          const bool elkies = ec::is_elkies(t, p, l);
          ne += elkies ? 1 : 0;
          delta += elkies ? 1 - alpha : -alpha;
        }
        part.acc.add(ne);
        if (config.keep_per_prime) part.records.push_back({p, t, ne, delta});
      }
    } catch (...) {
      errors[s] = std::current_exception();
    }
  };

  const unsigned workers = std::max(1u, std::min(shards, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (unsigned s = w; s < shards; s += workers) work(s);
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Accumulator total(stat.n_primes_ell, max_order);
  u64 primes = 0;
  std::vector<PrimeRecord> records;
  for (auto& part : parts) {
    total.merge(part.acc);
    primes += part.primes;
    records.insert(records.end(), part.records.begin(), part.records.end());
  }
  ExperimentReport r = make_report(config, std::move(ells), total);
  r.primes_in_range = primes;
  r.per_prime = std::move(records);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

BinomialModel binomial_model(u64 L, const std::set<u64>& excluded) {
  if (L < 3) fail(Errc::invalid_argument, "L must be >= 3");
  BinomialModel m;
  for (u64 l = L; l <= 2 * L; ++l) {
    if (l % 2 && ma::is_prime(l) && !excluded.count(l)) ++m.n;
  }
  m.mean = m.n / 2.0;
  m.sd = std::sqrt(static_cast<double>(m.n)) / 2;
  const BigInt den = BigInt(1) << m.n;
  for (unsigned j = 0; j <= m.n; ++j) m.pmf.emplace_back(comb::binomial(m.n, j), den);
  return m;
}

ChiSquare chi_square_vs_binomial(const ExperimentReport& report, double min_expected) {
  ChiSquare out;
  std::vector<std::pair<double, double>> cells;  // (observed, expected)
  double obs_total = 0, exp_total = 0;
  for (unsigned v = 0; v < report.histogram.size(); ++v) {
    double e = report.model_count(v);
    if (e < min_expected) continue;
    cells.emplace_back(static_cast<double>(report.histogram[v]), e);
    obs_total += static_cast<double>(report.histogram[v]);
    exp_total += e;
  }
  out.buckets = static_cast<unsigned>(cells.size());
  if (cells.size() < 2) return out;
  const double scale = obs_total / exp_total;
  for (auto [o, e] : cells) {
    e *= scale;
    out.statistic += (o - e) * (o - e) / e;
  }
  out.dof = out.buckets - 1;
  out.p_value = boost::math::gamma_q(out.dof / 2.0, out.statistic / 2.0);
  return out;
}

// ---------------------------------------------------------------------------
// Emission

namespace {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace

std::string to_json(const ExperimentReport& r) {
  json j;
  const auto& c = r.config;
  j["config"] = {{"curve", {c.curve.a1, c.curve.a2, c.curve.a3, c.curve.a4, c.curve.a6}},
                 {"bad_primes", std::vector<u64>(c.curve.bad_primes.begin(), c.curve.bad_primes.end())},
                 {"P", c.P},
                 {"L", c.L},
                 {"moments", c.moment_orders},
                 {"seed", c.seed},
                 {"shards", c.shards},
                 {"keep_per_prime", c.keep_per_prime}};
  j["ells"] = r.ells;
  j["n_primes_ell"] = r.stat.n_primes_ell;
  j["alpha"] = comb::to_string(r.stat.alpha);
  j["mu"] = comb::to_string(r.stat.mu);
  j["variance"] = comb::to_string(r.stat.variance);
  j["sigma"] = r.stat.sigma;
  j["population"] = r.population;
  j["primes_in_range"] = r.primes_in_range;
  json hist = json::array();
  for (unsigned v = 0; v < r.histogram.size(); ++v) {
    hist.push_back({{"ne", v}, {"count", r.histogram[v]}, {"model_count", r.model_count(v)}});
  }
  j["histogram"] = hist;
  json sums = json::array();
  for (const auto& s : r.power_sums) sums.push_back(s.str());
  j["power_sums"] = sums;
  json mom = json::array();
  for (const auto& m : r.moments) {
    mom.push_back({{"k", m.k}, {"empirical", m.empirical}, {"gaussian", m.gaussian}, {"abs_diff", m.abs_diff}});
  }
  j["moments"] = mom;
  j["binomial_model"] = {{"n", r.stat.n_primes_ell},
                         {"p", comb::to_string(r.stat.alpha)},
                         {"mean", r.stat.mu.convert_to<double>()},
                         {"sd", r.stat.sigma}};
  j["sample_mean"] = r.sample_mean;
  j["sample_variance"] = r.sample_variance;
  j["wall_seconds"] = r.wall_seconds;
  if (c.keep_per_prime) {
    json pp = json::array();
    for (const auto& rec : r.per_prime) pp.push_back({rec.p, rec.trace, rec.ne, rec.delta_sum});
    j["per_prime"] = pp;
  }
  return j.dump(2);
}

ExperimentReport report_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    ExperimentReport r;
    const auto& c = j.at("config");
    auto coeffs = c.at("curve").get<std::vector<i64>>();
    if (coeffs.size() != 5) fail(Errc::invalid_argument, "curve needs five coefficients");
    auto bad = c.at("bad_primes").get<std::vector<u64>>();
    r.config.curve = ec::GlobalCurve(coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4], {bad.begin(), bad.end()});
    r.config.P = c.at("P").get<u64>();
    r.config.L = c.at("L").get<u64>();
    r.config.moment_orders = c.at("moments").get<std::vector<unsigned>>();
    r.config.seed = c.at("seed").get<u64>();
    r.config.shards = c.at("shards").get<unsigned>();
    r.config.keep_per_prime = c.at("keep_per_prime").get<bool>();
    r.ells = j.at("ells").get<std::vector<u64>>();
    r.stat.n_primes_ell = j.at("n_primes_ell").get<unsigned>();
    r.stat.alpha = parse_rational(j.at("alpha").get<std::string>());
    r.stat.mu = parse_rational(j.at("mu").get<std::string>());
    r.stat.variance = parse_rational(j.at("variance").get<std::string>());
    r.stat.sigma = j.at("sigma").get<double>();
    r.population = j.at("population").get<u64>();
    r.primes_in_range = j.at("primes_in_range").get<u64>();
    for (const auto& b : j.at("histogram")) r.histogram.push_back(b.at("count").get<u64>());
    for (const auto& s : j.at("power_sums")) r.power_sums.emplace_back(s.get<std::string>());
    for (const auto& m : j.at("moments")) {
      r.moments.push_back({m.at("k").get<unsigned>(), m.at("empirical").get<double>(), m.at("gaussian").get<double>(),
                           m.at("abs_diff").get<double>()});
    }
    r.sample_mean = j.at("sample_mean").get<double>();
    r.sample_variance = j.at("sample_variance").get<double>();
    r.wall_seconds = j.at("wall_seconds").get<double>();
    if (j.contains("per_prime")) {
      for (const auto& rec : j.at("per_prime")) {
        r.per_prime.push_back({rec.at(0).get<u64>(), rec.at(1).get<i64>(), rec.at(2).get<unsigned>(), rec.at(3).get<double>()});
      }
    }
    return r;
  } catch (const json::exception& e) {
    fail(Errc::invalid_argument, std::string("malformed report JSON: ") + e.what());
  }
}

std::string to_csv(const ExperimentReport& r) {
  std::ostringstream os;
  os << std::setprecision(12);
  os << "ne,count,model_count\n";
  for (unsigned v = 0; v < r.histogram.size(); ++v) os << v << ',' << r.histogram[v] << ',' << r.model_count(v) << '\n';
  os << "\nk,empirical,gaussian,abs_diff\n";
  for (const auto& m : r.moments) os << m.k << ',' << m.empirical << ',' << m.gaussian << ',' << m.abs_diff << '\n';
  return os.str();
}

std::string to_svg(const ExperimentReport& r) {
  constexpr double kWidth = 800, kHeight = 600, kMargin = 60;
  const double plot_w = kWidth - 2 * kMargin, plot_h = kHeight - 2 * kMargin;
  const unsigned buckets = static_cast<unsigned>(r.histogram.size());
  const double mu = r.stat.mu.convert_to<double>();
  const double sigma = r.stat.sigma;
  const double pop = static_cast<double>(r.population);
  auto gauss = [&](double v) {
    const double z = (v - mu) / sigma;
    return pop * std::exp(-z * z / 2) / (sigma * std::sqrt(2 * M_PI));
  };
  double ymax = 1;
  for (auto c : r.histogram) ymax = std::max(ymax, static_cast<double>(c));
  ymax = std::max(ymax, gauss(mu)) * 1.05;
  const double bar_w = plot_w / std::max(1u, buckets);
  auto sx = [&](double v) { return kMargin + (v + 0.5) * bar_w; };
  auto sy = [&](double c) { return kMargin + plot_h - c / ymax * plot_h; };

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  os << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  os << "<text x=\"400\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">N_e(p, L) for L="
     << r.config.L << ", p in [" << r.config.P << ", " << 2 * r.config.P << "]</text>\n";
  os << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin + plot_h << "\" x2=\"" << kMargin + plot_w << "\" y2=\""
     << kMargin + plot_h << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\"" << kMargin + plot_h
     << "\" stroke=\"black\"/>\n";
  for (unsigned v = 0; v < buckets; ++v) {
    const double c = static_cast<double>(r.histogram[v]);
    if (c == 0) continue;
    os << "<rect x=\"" << kMargin + v * bar_w << "\" y=\"" << sy(c) << "\" width=\"" << bar_w * 0.9 << "\" height=\""
       << plot_h - (sy(c) - kMargin) << "\" fill=\"steelblue\"/>\n";
  }
  os << "<polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"2\" points=\"";
  const unsigned samples = 400;
  for (unsigned i = 0; i <= samples; ++i) {
    const double v = -0.5 + (buckets) * static_cast<double>(i) / samples;
    os << sx(v) << ',' << sy(gauss(v)) << ' ';
  }
  os << "\"/>\n";
  const unsigned tick = std::max(1u, buckets / 10);
  for (unsigned v = 0; v < buckets; v += tick) {
    os << "<text x=\"" << sx(v) << "\" y=\"" << kMargin + plot_h + 18
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << v << "</text>\n";
  }
  os << "<text x=\"" << kMargin << "\" y=\"" << kMargin - 8 << "\" font-family=\"sans-serif\" font-size=\"11\">"
     << std::setprecision(0) << ymax << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io, "cannot open " + path + " for writing");
  out << contents;
  if (!out) fail(Errc::io, "failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace elkies::harness

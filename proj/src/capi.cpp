#include "elkies/elkies.h"

#include <cstring>
#include <sstream>
#include <string>

#include "elkies/comb.hpp"
#include "elkies/error.hpp"
#include "elkies/ff.hpp"
#include "elkies/harness.hpp"
#include "elkies/modarith.hpp"
#include "elkies/sympl.hpp"

using namespace elkies;

struct elkies_field {
  ff::FieldPtr field;
};

struct elkies_curve {
  ec::GlobalCurve curve;
};

struct elkies_report {
  harness::ExperimentReport report;
};

namespace {

thread_local std::string g_last_error;

elkies_status to_status(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return ELKIES_E_INVALID_ARGUMENT;
    case Errc::domain: return ELKIES_E_DOMAIN;
    case Errc::context_mismatch: return ELKIES_E_CONTEXT_MISMATCH;
    case Errc::infeasible: return ELKIES_E_INFEASIBLE;
    case Errc::bad_reduction: return ELKIES_E_BAD_REDUCTION;
    case Errc::io: return ELKIES_E_IO;
    case Errc::internal: return ELKIES_E_INTERNAL;
  }
  return ELKIES_E_INTERNAL;
}

template <class F>
elkies_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ELKIES_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ELKIES_E_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) fail(Errc::invalid_argument, what);
}

elkies_status copy_out(const std::string& text, char* buf, size_t cap, size_t* len) {
  if (len) *len = text.size();
  if (!buf || cap <= text.size()) {
    if (!buf && cap == 0) return ELKIES_OK;
    g_last_error = "buffer too small";
    return ELKIES_E_BUFFER;
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return ELKIES_OK;
}

sympl::Matrix matrix_from(const elkies_field* field, unsigned h, const uint64_t* entries) {
  require(field && entries, "null argument");
  require(h >= 1, "h must be >= 1");
  const std::size_t n = 2 * std::size_t{h};
  std::vector<ff::Elem> a(entries, entries + n * n);
  for (auto v : a) require(field->field->valid(v), "matrix entry outside the field");
  return sympl::Matrix(field->field, n, std::move(a));
}

std::vector<sympl::CensusRow> run_census(const elkies_field* field, unsigned h, int has_lambda0, uint64_t lambda0,
                                         unsigned shards) {
  require(field != nullptr, "null field");
  std::optional<ff::Elem> l0;
  if (has_lambda0) l0 = lambda0;
  return sympl::count_split_exhaustive(field->field, h, l0, shards == 0 ? 1 : shards);
}

}  // namespace

extern "C" {

const char* elkies_version(void) { return "1.0.0"; }

const char* elkies_status_name(elkies_status status) {
  switch (status) {
    case ELKIES_OK: return "ok";
    case ELKIES_E_INVALID_ARGUMENT: return "invalid_argument";
    case ELKIES_E_DOMAIN: return "domain";
    case ELKIES_E_CONTEXT_MISMATCH: return "context_mismatch";
    case ELKIES_E_INFEASIBLE: return "infeasible";
    case ELKIES_E_BAD_REDUCTION: return "bad_reduction";
    case ELKIES_E_IO: return "io";
    case ELKIES_E_INTERNAL: return "internal";
    case ELKIES_E_BUFFER: return "buffer";
  }
  return "unknown";
}

const char* elkies_last_error(void) { return g_last_error.c_str(); }

elkies_status elkies_alpha(unsigned h, char* buf, size_t cap, size_t* len) {
  return guarded([&] { return copy_out(comb::to_string(comb::alpha(h)), buf, cap, len); });
}

elkies_status elkies_alpha_double(unsigned h, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = comb::to_double(comb::alpha(h));
    return ELKIES_OK;
  });
}

elkies_status elkies_f(unsigned h, uint64_t* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = comb::f(h);
    return ELKIES_OK;
  });
}

elkies_status elkies_gauss_moment(unsigned k, char* buf, size_t cap, size_t* len) {
  return guarded([&] { return copy_out(comb::gauss_moment(k).str(), buf, cap, len); });
}

elkies_status elkies_pairing_count(unsigned nu, char* buf, size_t cap, size_t* len) {
  return guarded([&] { return copy_out(comb::pairing_count(nu).str(), buf, cap, len); });
}

elkies_status elkies_field_create(uint64_t q, elkies_field** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    auto pe = modarith::prime_power(q);
    if (!pe) fail(Errc::invalid_argument, "q = " + std::to_string(q) + " is not a prime power");
    *out = new elkies_field{ff::Field::make(pe->first, pe->second)};
    return ELKIES_OK;
  });
}

void elkies_field_destroy(elkies_field* field) { delete field; }

elkies_status elkies_field_order(const elkies_field* field, uint64_t* out) {
  return guarded([&] {
    require(field && out, "null argument");
    *out = field->field->order();
    return ELKIES_OK;
  });
}

elkies_status elkies_field_header(const elkies_field* field, char* buf, size_t cap, size_t* len) {
  return guarded([&] {
    require(field != nullptr, "null field");
    return copy_out(field->field->header(), buf, cap, len);
  });
}

elkies_status elkies_poly_factor(const elkies_field* field, const uint64_t* coeffs, size_t n, char* buf, size_t cap,
                                 size_t* len) {
  return guarded([&] {
    require(field && (coeffs || n == 0), "null argument");
    std::vector<ff::Elem> c(coeffs, coeffs + n);
    for (auto v : c) require(field->field->valid(v), "coefficient outside the field");
    auto fac = ff::factor(ff::Poly(field->field, std::move(c)));
    std::ostringstream os;
    os << "unit=" << fac.unit << '\n';
    for (const auto& f : fac.factors) os << ff::serialize(f.poly) << '^' << f.multiplicity << '\n';
    return copy_out(os.str(), buf, cap, len);
  });
}

elkies_status elkies_census(const elkies_field* field, unsigned h, int has_lambda0, uint64_t lambda0, unsigned shards,
                            elkies_census_row* rows, size_t cap, size_t* count) {
  return guarded([&] {
    auto result = run_census(field, h, has_lambda0, lambda0, shards);
    if (count) *count = result.size();
    if (!rows || cap < result.size()) {
      g_last_error = "row buffer too small";
      return ELKIES_E_BUFFER;
    }
    for (std::size_t i = 0; i < result.size(); ++i) {
      const auto& r = result[i];
      rows[i] = {r.q, r.h, r.lambda0, r.split_sep, r.split_insep, r.total};
    }
    return ELKIES_OK;
  });
}

elkies_status elkies_census_write_csv(const elkies_field* field, unsigned h, int has_lambda0, uint64_t lambda0,
                                      unsigned shards, const char* path) {
  return guarded([&] {
    require(path != nullptr, "null path");
    auto result = run_census(field, h, has_lambda0, lambda0, shards);
    harness::write_file(path, sympl::census_csv(result, *field->field));
    return ELKIES_OK;
  });
}

elkies_status elkies_gsp4_split_count(uint64_t ell, char* buf, size_t cap, size_t* len) {
  return guarded([&] { return copy_out(sympl::count_split_gsp4_formula(ell).str(), buf, cap, len); });
}

elkies_status elkies_split_bruteforce(const elkies_field* field, unsigned h, const uint64_t* entries, int* split) {
  return guarded([&] {
    require(split != nullptr, "null output");
    auto m = sympl::SymplecticMatrix::checked(matrix_from(field, h, entries));
    *split = sympl::is_split_bruteforce(m) ? 1 : 0;
    return ELKIES_OK;
  });
}

elkies_status elkies_split_charpoly(const elkies_field* field, unsigned h, const uint64_t* entries,
                                    elkies_split* verdict) {
  return guarded([&] {
    require(verdict != nullptr, "null output");
    auto m = sympl::SymplecticMatrix::checked(matrix_from(field, h, entries));
    switch (sympl::is_split_charpoly(m)) {
      case sympl::SplitVerdict::not_split: *verdict = ELKIES_NOT_SPLIT; break;
      case sympl::SplitVerdict::split: *verdict = ELKIES_SPLIT; break;
      case sympl::SplitVerdict::unknown: *verdict = ELKIES_SPLIT_UNKNOWN; break;
    }
    return ELKIES_OK;
  });
}

elkies_status elkies_curve_create(const int64_t a[5], const uint64_t* bad_primes, size_t n_bad, elkies_curve** out) {
  return guarded([&] {
    require(a && out && (bad_primes || n_bad == 0), "null argument");
    std::set<uint64_t> bad(bad_primes, bad_primes + n_bad);
    *out = new elkies_curve{ec::GlobalCurve(a[0], a[1], a[2], a[3], a[4], std::move(bad))};
    return ELKIES_OK;
  });
}

elkies_status elkies_curve_create_default(elkies_curve** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = new elkies_curve{ec::GlobalCurve::cremona_11a3()};
    return ELKIES_OK;
  });
}

void elkies_curve_destroy(elkies_curve* curve) { delete curve; }

elkies_status elkies_curve_trace(const elkies_curve* curve, uint64_t p, uint64_t seed, int64_t* trace) {
  return guarded([&] {
    require(curve && trace, "null argument");
    *trace = ec::trace_of_frobenius(ec::CurveModP(curve->curve, p), seed);
    return ELKIES_OK;
  });
}

elkies_status elkies_curve_count_points(const elkies_curve* curve, uint64_t p, uint64_t seed, uint64_t* order) {
  return guarded([&] {
    require(curve && order, "null argument");
    *order = ec::count_points(ec::CurveModP(curve->curve, p), seed);
    return ELKIES_OK;
  });
}

elkies_status elkies_curve_elkies_count(const elkies_curve* curve, uint64_t p, uint64_t L, uint64_t seed,
                                        unsigned* count) {
  return guarded([&] {
    require(curve && count, "null argument");
    *count = ec::elkies_count(curve->curve, p, L, seed);
    return ELKIES_OK;
  });
}

void elkies_sweep_config_init(elkies_sweep_config* config) {
  if (!config) return;
  static const unsigned kOrders[] = {1, 2, 3, 4};
  config->curve = nullptr;
  config->P = 100000;
  config->L = 100;
  config->moment_orders = kOrders;
  config->n_moments = 4;
  config->seed = 42;
  config->shards = 1;
  config->keep_per_prime = 0;
}

elkies_status elkies_sweep(const elkies_sweep_config* config, elkies_report** out) {
  return guarded([&] {
    require(config && out, "null argument");
    require(config->moment_orders || config->n_moments == 0, "null moment list");
    harness::SweepConfig c;
    if (config->curve) c.curve = config->curve->curve;
    c.P = config->P;
    c.L = config->L;
    c.moment_orders.assign(config->moment_orders, config->moment_orders + config->n_moments);
    c.seed = config->seed;
    c.shards = config->shards;
    c.keep_per_prime = config->keep_per_prime != 0;
    *out = new elkies_report{harness::sweep(c)};
    return ELKIES_OK;
  });
}

void elkies_report_destroy(elkies_report* report) { delete report; }

elkies_status elkies_report_summary_get(const elkies_report* report, elkies_report_summary* out) {
  return guarded([&] {
    require(report && out, "null argument");
    const auto& r = report->report;
    *out = {r.config.P,
            r.config.L,
            r.stat.n_primes_ell,
            r.stat.alpha.convert_to<double>(),
            r.stat.mu.convert_to<double>(),
            r.stat.sigma,
            r.population,
            r.primes_in_range,
            r.sample_mean,
            r.sample_variance,
            r.wall_seconds};
    return ELKIES_OK;
  });
}

elkies_status elkies_report_histogram(const elkies_report* report, uint64_t* counts, size_t cap, size_t* n) {
  return guarded([&] {
    require(report != nullptr, "null report");
    const auto& h = report->report.histogram;
    if (n) *n = h.size();
    if (!counts || cap < h.size()) {
      g_last_error = "histogram buffer too small";
      return ELKIES_E_BUFFER;
    }
    std::copy(h.begin(), h.end(), counts);
    return ELKIES_OK;
  });
}

elkies_status elkies_report_moments(const elkies_report* report, elkies_moment* rows, size_t cap, size_t* n) {
  return guarded([&] {
    require(report != nullptr, "null report");
    const auto& m = report->report.moments;
    if (n) *n = m.size();
    if (!rows || cap < m.size()) {
      g_last_error = "moment buffer too small";
      return ELKIES_E_BUFFER;
    }
    for (std::size_t i = 0; i < m.size(); ++i) rows[i] = {m[i].k, m[i].empirical, m[i].gaussian, m[i].abs_diff};
    return ELKIES_OK;
  });
}

elkies_status elkies_report_moments_for(const elkies_report* report, const unsigned* orders, size_t n,
                                        elkies_moment* rows) {
  return guarded([&] {
    require(report && (orders || n == 0) && (rows || n == 0), "null argument");
    auto m = harness::moments(report->report, std::span<const unsigned>(orders, n));
    for (std::size_t i = 0; i < m.size(); ++i) rows[i] = {m[i].k, m[i].empirical, m[i].gaussian, m[i].abs_diff};
    return ELKIES_OK;
  });
}

elkies_status elkies_report_chi_square(const elkies_report* report, double min_expected, elkies_chi_square* out) {
  return guarded([&] {
    require(report && out, "null argument");
    auto c = harness::chi_square_vs_binomial(report->report, min_expected);
    *out = {c.statistic, c.dof, c.p_value, c.buckets};
    return ELKIES_OK;
  });
}

elkies_status elkies_report_json(const elkies_report* report, char* buf, size_t cap, size_t* len) {
  return guarded([&] {
    require(report != nullptr, "null report");
    return copy_out(harness::to_json(report->report), buf, cap, len);
  });
}

elkies_status elkies_report_from_json(const char* text, elkies_report** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new elkies_report{harness::report_from_json(text)};
    return ELKIES_OK;
  });
}

elkies_status elkies_report_equal(const elkies_report* a, const elkies_report* b, int* equal) {
  return guarded([&] {
    require(a && b && equal, "null argument");
    *equal = a->report == b->report ? 1 : 0;
    return ELKIES_OK;
  });
}

elkies_status elkies_report_write_json(const elkies_report* report, const char* path) {
  return guarded([&] {
    require(report && path, "null argument");
    harness::write_file(path, harness::to_json(report->report));
    return ELKIES_OK;
  });
}

elkies_status elkies_report_write_csv(const elkies_report* report, const char* path) {
  return guarded([&] {
    require(report && path, "null argument");
    harness::write_file(path, harness::to_csv(report->report));
    return ELKIES_OK;
  });
}

elkies_status elkies_report_write_svg(const elkies_report* report, const char* path) {
  return guarded([&] {
    require(report && path, "null argument");
    harness::write_file(path, harness::to_svg(report->report));
    return ELKIES_OK;
  });
}

}  // extern "C"

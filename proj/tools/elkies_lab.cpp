// elkies-lab: command-line front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "elkies/elkies.h"

namespace {

struct Failure {
  elkies_status status;
};

void check(elkies_status s) {
  if (s != ELKIES_OK) throw Failure{s};
}

std::string fetch(elkies_status (*fn)(unsigned, char*, size_t, size_t*), unsigned arg) {
  size_t len = 0;
  check(fn(arg, nullptr, 0, &len));
  std::string out(len + 1, '\0');
  check(fn(arg, out.data(), out.size(), &len));
  out.resize(len);
  return out;
}

std::string field_header(const elkies_field* f) {
  size_t len = 0;
  check(elkies_field_header(f, nullptr, 0, &len));
  std::string out(len + 1, '\0');
  check(elkies_field_header(f, out.data(), out.size(), &len));
  out.resize(len);
  return out;
}

struct CensusArgs {
  uint64_t q = 0;
  unsigned h = 1;
  uint64_t lambda0 = 0;
  unsigned shards = 1;
  std::string out;
};

int run_census(const CensusArgs& a, bool has_lambda) {
  elkies_field* field = nullptr;
  check(elkies_field_create(a.q, &field));
  std::unique_ptr<elkies_field, void (*)(elkies_field*)> guard(field, elkies_field_destroy);
  uint64_t q = 0;
  check(elkies_field_order(field, &q));
  std::vector<elkies_census_row> rows(q);
  size_t n = 0;
  check(elkies_census(field, a.h, has_lambda, a.lambda0, a.shards, rows.data(), rows.size(), &n));
  rows.resize(n);
  std::ostringstream text;
  text << "# field: " << field_header(field) << "\n";
  text << "q,h,lambda0,split_sep,split_insep,total\n";
  for (const auto& r : rows) {
    text << r.q << ',' << r.h << ',' << r.lambda0 << ',' << r.split_sep << ',' << r.split_insep << ',' << r.total
         << '\n';
  }
  std::cout << text.str();
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    out << text.str();
    if (!out) {
      std::cerr << "cannot write " << a.out << "\n";
      return 1;
    }
  }
  return 0;
}

int run_alpha(unsigned h, bool table) {
  auto row = [](unsigned k) {
    double d = 0;
    uint64_t f = 0;
    check(elkies_alpha_double(k, &d));
    check(elkies_f(k, &f));
    std::printf("%u\t%s\t%.10f\t%llu\n", k, fetch(elkies_alpha, k).c_str(), d, static_cast<unsigned long long>(f));
  };
  std::printf("h\talpha_h\tdecimal\tf(h)\n");
  if (table) {
    for (unsigned k = 1; k <= 8; ++k) row(k);
  } else {
    row(h);
  }
  return 0;
}

struct SweepArgs {
  uint64_t P = 100000;
  uint64_t L = 100;
  std::vector<int64_t> curve{0, -1, 1, 0, 0};
  std::vector<uint64_t> bad{11};
  std::vector<unsigned> moments{1, 2, 3, 4};
  uint64_t seed = 42;
  unsigned shards = 1;
  std::string out, csv, svg;
};

using ReportPtr = std::unique_ptr<elkies_report, void (*)(elkies_report*)>;
using CurvePtr = std::unique_ptr<elkies_curve, void (*)(elkies_curve*)>;

CurvePtr make_curve(const SweepArgs& a) {
  if (a.curve.size() != 5) {
    std::cerr << "--curve needs five integers a1,a2,a3,a4,a6\n";
    throw Failure{ELKIES_E_INVALID_ARGUMENT};
  }
  elkies_curve* c = nullptr;
  check(elkies_curve_create(a.curve.data(), a.bad.data(), a.bad.size(), &c));
  return CurvePtr(c, elkies_curve_destroy);
}

ReportPtr sweep_once(const SweepArgs& a, const elkies_curve* curve, uint64_t L) {
  elkies_sweep_config cfg;
  elkies_sweep_config_init(&cfg);
  cfg.curve = curve;
  cfg.P = a.P;
  cfg.L = L;
  cfg.moment_orders = a.moments.data();
  cfg.n_moments = a.moments.size();
  cfg.seed = a.seed;
  cfg.shards = a.shards;
  elkies_report* r = nullptr;
  check(elkies_sweep(&cfg, &r));
  return ReportPtr(r, elkies_report_destroy);
}

int run_sweep(const SweepArgs& a) {
  auto curve = make_curve(a);
  auto report = sweep_once(a, curve.get(), a.L);
  if (!a.out.empty()) check(elkies_report_write_json(report.get(), a.out.c_str()));
  if (!a.csv.empty()) check(elkies_report_write_csv(report.get(), a.csv.c_str()));
  if (!a.svg.empty()) check(elkies_report_write_svg(report.get(), a.svg.c_str()));

  elkies_report_summary s;
  check(elkies_report_summary_get(report.get(), &s));
  elkies_chi_square chi;
  check(elkies_report_chi_square(report.get(), 10.0, &chi));
  std::vector<elkies_moment> m(a.moments.size());
  size_t n = 0;
  check(elkies_report_moments(report.get(), m.data(), m.size(), &n));
  std::printf("P=%llu L=%llu primes=%llu good=%llu n_ell=%u\n", static_cast<unsigned long long>(s.P),
              static_cast<unsigned long long>(s.L), static_cast<unsigned long long>(s.primes_in_range),
              static_cast<unsigned long long>(s.population), s.n_primes_ell);
  std::printf("mu=%.6f sigma=%.6f mean=%.6f variance=%.6f\n", s.mu, s.sigma, s.sample_mean, s.sample_variance);
  std::printf("chi2=%.4f dof=%u p=%.6g\n", chi.statistic, chi.dof, chi.p_value);
  std::printf("k\tE[X^k]\tm_k\t|diff|\n");
  for (size_t i = 0; i < n; ++i) std::printf("%u\t%.6f\t%.6f\t%.6f\n", m[i].k, m[i].empirical, m[i].gaussian, m[i].abs_diff);
  std::printf("wall=%.3fs\n", s.wall_seconds);
  return 0;
}

int run_scan(SweepArgs a, const std::vector<uint64_t>& ls) {
  auto curve = make_curve(a);
  a.moments = {1, 2, 4};
  std::printf("L\tn_ell\tE[X]\tE[X^2]\tE[X^4]\n");
  for (uint64_t L : ls) {
    auto report = sweep_once(a, curve.get(), L);
    elkies_report_summary s;
    check(elkies_report_summary_get(report.get(), &s));
    elkies_moment m[3];
    size_t n = 0;
    check(elkies_report_moments(report.get(), m, 3, &n));
    std::printf("%llu\t%u\t%.6f\t%.6f\t%.6f\n", static_cast<unsigned long long>(L), s.n_primes_ell, m[0].empirical,
                m[1].empirical, m[2].empirical);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split matrices in GSp_2h(F_q) and Elkies primes of elliptic curves"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", elkies_version());

  CensusArgs census;
  auto* c = app.add_subcommand("census", "Exact census of split elements of GSp_2h(F_q)");
  c->add_option("--q", census.q, "Field order, a prime power")->required();
  c->add_option("--h", census.h, "Half dimension")->required()->check(CLI::PositiveNumber);
  auto* lambda_opt = c->add_option("--lambda", census.lambda0, "Restrict to one multiplier (element code)");
  c->add_option("--shards", census.shards, "Worker shards")->check(CLI::PositiveNumber);
  c->add_option("--out", census.out, "CSV output path");

  unsigned alpha_h = 1;
  bool alpha_table = false;
  auto* al = app.add_subcommand("alpha", "Exact density alpha_h");
  auto* alpha_h_opt = al->add_option("--h", alpha_h, "h >= 1")->check(CLI::PositiveNumber);
  al->add_flag("--table", alpha_table, "Values for h = 1..8");

  SweepArgs sw;
  auto add_sweep_options = [&](CLI::App* sub) {
    sub->add_option("--P", sw.P, "Prime window [P, 2P]");
    sub->add_option("--curve", sw.curve, "a1,a2,a3,a4,a6")->delimiter(',')->expected(5);
    sub->add_option("--bad-primes", sw.bad, "Bad primes")->delimiter(',');
    sub->add_option("--seed", sw.seed, "Global seed");
    sub->add_option("--shards", sw.shards, "Worker shards")->check(CLI::PositiveNumber);
  };
  auto* s = app.add_subcommand("sweep", "Distribution of Elkies primes over p in [P, 2P]");
  add_sweep_options(s);
  s->add_option("--L", sw.L, "Elkies range [L, 2L]")->check(CLI::Range(uint64_t{3}, uint64_t{1} << 39));
  s->add_option("--moments", sw.moments, "Moment orders")->delimiter(',');
  s->add_option("--out", sw.out, "JSON report path");
  s->add_option("--csv", sw.csv, "CSV output path");
  s->add_option("--svg", sw.svg, "SVG histogram path");

  std::vector<uint64_t> scan_ls;
  auto* sc = app.add_subcommand("scan", "E[X^2] against L for fixed P");
  add_sweep_options(sc);
  sc->add_option("--L", scan_ls, "List of L values")->delimiter(',')->required()->check(
      CLI::Range(uint64_t{3}, uint64_t{1} << 39));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c) return run_census(census, lambda_opt->count() > 0);
    if (*al) {
      if (!alpha_table && alpha_h_opt->count() == 0) {
        std::cerr << "alpha: pass --h or --table\n";
        return 2;
      }
      return run_alpha(alpha_h, alpha_table);
    }
    if (*s) return run_sweep(sw);
    if (*sc) return run_scan(sw, scan_ls);
  } catch (const Failure& f) {
    std::cerr << "error (" << elkies_status_name(f.status) << "): " << elkies_last_error() << "\n";
    return 1;
  }
  return 0;
}

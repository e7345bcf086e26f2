#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "elkies/elkies.h"

namespace {

std::string text_of(elkies_status (*fn)(unsigned, char*, size_t, size_t*), unsigned arg) {
  size_t len = 0;
  REQUIRE(fn(arg, nullptr, 0, &len) == ELKIES_OK);
  std::string s(len + 1, '\0');
  REQUIRE(fn(arg, s.data(), s.size(), &len) == ELKIES_OK);
  s.resize(len);
  return s;
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(elkies_status_name(ELKIES_OK)) == "ok");
  CHECK(std::string(elkies_status_name(ELKIES_E_BAD_REDUCTION)) == "bad_reduction");
  CHECK(std::strlen(elkies_version()) > 0);
  char buf[16];
  CHECK(elkies_alpha(0, buf, sizeof buf, nullptr) == ELKIES_E_INVALID_ARGUMENT);
  CHECK(std::strlen(elkies_last_error()) > 0);
  CHECK(elkies_alpha(1, buf, sizeof buf, nullptr) == ELKIES_OK);
  CHECK(std::string(elkies_last_error()).empty());
}

TEST_CASE("string buffers") {
  char small[3];
  size_t len = 0;
  CHECK(elkies_alpha(8, small, sizeof small, &len) == ELKIES_E_BUFFER);
  CHECK(len == std::strlen("6435/32768"));
  CHECK(text_of(elkies_alpha, 8) == "6435/32768");
  CHECK(text_of(elkies_alpha, 2) == "3/8");
  CHECK(text_of(elkies_gauss_moment, 6) == "15");
  CHECK(text_of(elkies_pairing_count, 3) == "90");
  double d = 0;
  CHECK(elkies_alpha_double(4, &d) == ELKIES_OK);
  CHECK(d == doctest::Approx(35.0 / 128));
  uint64_t f = 0;
  CHECK(elkies_f(3, &f) == ELKIES_OK);
  CHECK(f == 22);
  CHECK(elkies_f(3, nullptr) == ELKIES_E_INVALID_ARGUMENT);
}

TEST_CASE("fields and factoring") {
  elkies_field* f = nullptr;
  CHECK(elkies_field_create(6, &f) == ELKIES_E_INVALID_ARGUMENT);
  REQUIRE(elkies_field_create(9, &f) == ELKIES_OK);
  uint64_t q = 0;
  CHECK(elkies_field_order(f, &q) == ELKIES_OK);
  CHECK(q == 9);
  char buf[256];
  CHECK(elkies_field_header(f, buf, sizeof buf, nullptr) == ELKIES_OK);
  CHECK(std::string(buf) == "q=3^2;modulus=1,0,1");
  elkies_field_destroy(f);

  elkies_field* f2 = nullptr;
  REQUIRE(elkies_field_create(2, &f2) == ELKIES_OK);
  const uint64_t c[] = {1, 0, 1, 0, 1};
  CHECK(elkies_poly_factor(f2, c, 5, buf, sizeof buf, nullptr) == ELKIES_OK);
  CHECK(std::string(buf) == "unit=1\nq=2^1;modulus=0,1;coeffs=1,1,1^2\n");
  CHECK(elkies_poly_factor(f2, c, 0, buf, sizeof buf, nullptr) == ELKIES_E_DOMAIN);
  const uint64_t bad[] = {1, 2};
  CHECK(elkies_poly_factor(f2, bad, 2, buf, sizeof buf, nullptr) == ELKIES_E_INVALID_ARGUMENT);
  elkies_field_destroy(f2);
}

TEST_CASE("census through the C interface") {
  elkies_field* f = nullptr;
  REQUIRE(elkies_field_create(3, &f) == ELKIES_OK);
  elkies_census_row rows[2];
  size_t n = 0;
  REQUIRE(elkies_census(f, 2, 0, 0, 2, rows, 2, &n) == ELKIES_OK);
  CHECK(n == 2);
  CHECK(rows[0].split_sep + rows[0].split_insep + rows[1].split_sep + rows[1].split_insep == 57024);
  CHECK(rows[0].total + rows[1].total == 103680);
  CHECK(elkies_census(f, 1, 0, 0, 1, rows, 1, &n) == ELKIES_E_BUFFER);
  CHECK(n == 2);
  REQUIRE(elkies_census(f, 1, 1, 1, 1, rows, 1, &n) == ELKIES_OK);
  CHECK(rows[0].total == 24);
  CHECK(elkies_census(f, 1, 1, 0, 1, rows, 1, &n) == ELKIES_E_INVALID_ARGUMENT);

  const auto path = temp_path("elkies_census_test.csv");
  REQUIRE(elkies_census_write_csv(f, 1, 0, 0, 1, path.c_str()) == ELKIES_OK);
  const auto csv = slurp(path);
  CHECK(csv.rfind("# field: q=3^1;modulus=0,1\nq,h,lambda0,split_sep,split_insep,total\n3,1,1,", 0) == 0);
  std::filesystem::remove(path);
  CHECK(elkies_census_write_csv(f, 1, 0, 0, 1, "/nonexistent/dir/x.csv") == ELKIES_E_IO);

  char buf[64];
  CHECK(elkies_gsp4_split_count(3, buf, sizeof buf, nullptr) == ELKIES_OK);
  CHECK(std::string(buf) == "57024");
  CHECK(elkies_gsp4_split_count(2, buf, sizeof buf, nullptr) == ELKIES_E_INVALID_ARGUMENT);
  elkies_field_destroy(f);
}

TEST_CASE("split checks through the C interface") {
  elkies_field* f = nullptr;
  REQUIRE(elkies_field_create(3, &f) == ELKIES_OK);
  const uint64_t rot[] = {0, 2, 1, 0};
  int split = -1;
  CHECK(elkies_split_bruteforce(f, 1, rot, &split) == ELKIES_OK);
  CHECK(split == 0);
  elkies_split verdict = ELKIES_SPLIT_UNKNOWN;
  CHECK(elkies_split_charpoly(f, 1, rot, &verdict) == ELKIES_OK);
  CHECK(verdict == ELKIES_NOT_SPLIT);
  const uint64_t id[] = {1, 0, 0, 1};
  CHECK(elkies_split_charpoly(f, 1, id, &verdict) == ELKIES_OK);
  CHECK(verdict == ELKIES_SPLIT);
  const uint64_t sing[] = {1, 1, 1, 1};
  CHECK(elkies_split_bruteforce(f, 1, sing, &split) == ELKIES_E_DOMAIN);
  const uint64_t out_of_range[] = {5, 0, 0, 1};
  CHECK(elkies_split_bruteforce(f, 1, out_of_range, &split) == ELKIES_E_INVALID_ARGUMENT);
  elkies_field_destroy(f);
}

TEST_CASE("curves through the C interface") {
  elkies_curve* c = nullptr;
  REQUIRE(elkies_curve_create_default(&c) == ELKIES_OK);
  int64_t t = 0;
  CHECK(elkies_curve_trace(c, 13, 0, &t) == ELKIES_OK);
  CHECK(t == 4);
  uint64_t n = 0;
  CHECK(elkies_curve_count_points(c, 19, 0, &n) == ELKIES_OK);
  CHECK(n == 20);
  CHECK(elkies_curve_trace(c, 11, 0, &t) == ELKIES_E_BAD_REDUCTION);
  unsigned ne = 0;
  CHECK(elkies_curve_elkies_count(c, 10007, 10, 0, &ne) == ELKIES_OK);
  CHECK(ne <= 3);
  elkies_curve_destroy(c);

  const int64_t singular[] = {0, 0, 0, 0, 0};
  CHECK(elkies_curve_create(singular, nullptr, 0, &c) == ELKIES_E_INVALID_ARGUMENT);
  const int64_t a[] = {0, -1, 1, 0, 0};
  const uint64_t bad[] = {11};
  REQUIRE(elkies_curve_create(a, bad, 1, &c) == ELKIES_OK);
  CHECK(elkies_curve_trace(c, 5, 0, &t) == ELKIES_OK);
  CHECK(t == 1);
  elkies_curve_destroy(c);
}

TEST_CASE("sweep and report through the C interface") {
  elkies_sweep_config cfg;
  elkies_sweep_config_init(&cfg);
  cfg.P = 20000;
  cfg.L = 20;
  cfg.shards = 3;
  elkies_report* r = nullptr;
  REQUIRE(elkies_sweep(&cfg, &r) == ELKIES_OK);

  elkies_report_summary s;
  REQUIRE(elkies_report_summary_get(r, &s) == ELKIES_OK);
  CHECK(s.P == 20000);
  CHECK(s.alpha == 0.5);
  CHECK(s.mu == s.n_primes_ell / 2.0);

  std::vector<uint64_t> hist(s.n_primes_ell + 1);
  size_t n = 0;
  REQUIRE(elkies_report_histogram(r, hist.data(), hist.size(), &n) == ELKIES_OK);
  uint64_t total = 0;
  for (auto v : hist) total += v;
  CHECK(total == s.population);
  CHECK(elkies_report_histogram(r, hist.data(), 1, &n) == ELKIES_E_BUFFER);

  elkies_moment m[4];
  REQUIRE(elkies_report_moments(r, m, 4, &n) == ELKIES_OK);
  CHECK(n == 4);
  CHECK(m[1].k == 2);
  const unsigned orders[] = {2};
  elkies_moment m2;
  REQUIRE(elkies_report_moments_for(r, orders, 1, &m2) == ELKIES_OK);
  CHECK(m2.empirical == m[1].empirical);
  const unsigned too_high[] = {9};
  CHECK(elkies_report_moments_for(r, too_high, 1, &m2) == ELKIES_E_INVALID_ARGUMENT);

  elkies_chi_square chi;
  CHECK(elkies_report_chi_square(r, 10.0, &chi) == ELKIES_OK);
  CHECK(chi.buckets > 1);

  size_t len = 0;
  REQUIRE(elkies_report_json(r, nullptr, 0, &len) == ELKIES_OK);
  std::string json(len + 1, '\0');
  REQUIRE(elkies_report_json(r, json.data(), json.size(), &len) == ELKIES_OK);
  elkies_report* back = nullptr;
  REQUIRE(elkies_report_from_json(json.c_str(), &back) == ELKIES_OK);
  int equal = 0;
  CHECK(elkies_report_equal(r, back, &equal) == ELKIES_OK);
  CHECK(equal == 1);
  elkies_report_destroy(back);
  CHECK(elkies_report_from_json("not json", &back) == ELKIES_E_INVALID_ARGUMENT);

  const auto jp = temp_path("elkies_capi.json"), cp = temp_path("elkies_capi.csv"), sp = temp_path("elkies_capi.svg");
  CHECK(elkies_report_write_json(r, jp.c_str()) == ELKIES_OK);
  CHECK(elkies_report_write_csv(r, cp.c_str()) == ELKIES_OK);
  CHECK(elkies_report_write_svg(r, sp.c_str()) == ELKIES_OK);
  CHECK(slurp(cp).rfind("ne,count,model_count\n", 0) == 0);
  CHECK(slurp(sp).find("<svg") == 0);
  for (const auto& p : {jp, cp, sp}) std::filesystem::remove(p);
  elkies_report_destroy(r);

  cfg.L = 2;
  CHECK(elkies_sweep(&cfg, &r) == ELKIES_E_INVALID_ARGUMENT);
  cfg.L = 20;
  cfg.P = 30;
  CHECK(elkies_sweep(&cfg, &r) == ELKIES_E_INVALID_ARGUMENT);
  CHECK(elkies_sweep(nullptr, &r) == ELKIES_E_INVALID_ARGUMENT);
}

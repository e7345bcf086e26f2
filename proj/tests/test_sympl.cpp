#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "elkies/comb.hpp"
#include "elkies/error.hpp"
#include "elkies/sympl.hpp"
#include "oracles.hpp"

using namespace elkies;
using ff::Elem;
using ff::Field;
using ff::Poly;
using sympl::Matrix;
using sympl::SplitVerdict;
using sympl::SymplecticMatrix;

namespace {

using Vec = std::vector<std::uint64_t>;

Vec apply(const oracle::IMat& m, const Vec& v, std::uint64_t p) {
  const std::size_t n = v.size();
  Vec r(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i] = (r[i] + m[i * n + j] * v[j]) % p;
  return r;
}

std::uint64_t psi(const Vec& u, const Vec& v, std::uint64_t p) {
  const std::size_t h = u.size() / 2;
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < h; ++i) s = (s + u[i] * v[h + i] + (p - u[h + i]) * v[i]) % p;
  return s;
}

std::vector<Vec> all_vectors(std::size_t n, std::uint64_t p) {
  std::vector<Vec> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vec v(n);
    std::uint64_t c = code;
    for (auto& x : v) {
      x = c % p;
      c /= p;
    }
    out.push_back(v);
  }
  return out;
}

// Split test for h in {1, 2} over F_p by searching stable isotropic spans.
bool split_oracle(const oracle::IMat& m, std::size_t n, std::uint64_t p) {
  auto vs = all_vectors(n, p);
  if (n == 2) {
    for (const auto& v : vs) {
      Vec w = apply(m, v, p);
      // w parallel to v
      if ((w[0] * v[1] + p * p - w[1] * v[0]) % p == 0) return true;
    }
    return false;
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Vec &u = vs[i], &v = vs[j];
      if (psi(u, v, p) != 0) continue;
      std::set<Vec> span;
      for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
          Vec s(n);
          for (std::size_t k = 0; k < n; ++k) s[k] = (a * u[k] + b * v[k]) % p;
          span.insert(s);
        }
      if (span.size() != p * p) continue;
      if (span.count(apply(m, u, p)) && span.count(apply(m, v, p))) return true;
    }
  }
  return false;
}

Matrix M(const ff::FieldPtr& f, std::size_t n, std::vector<Elem> e) { return Matrix(f, n, std::move(e)); }

Poly P(const ff::FieldPtr& f, std::vector<Elem> c) { return Poly(f, std::move(c)); }

bool is_split_verdict(SplitVerdict v) { return v == SplitVerdict::split; }

}  // namespace

TEST_CASE("multiplier examples") {
  auto f3 = Field::make(3);
  for (unsigned h = 1; h <= 3; ++h) CHECK(sympl::multiplier(Matrix::identity(f3, 2 * h)) == Elem{1});
  auto f7 = Field::make(7);
  for (Elem a = 1; a < 7; ++a) CHECK(sympl::multiplier(Matrix::scalar(f7, 2, a)) == f7->mul(a, a));
  CHECK(sympl::multiplier(M(f3, 2, {0, 2, 1, 0})) == Elem{1});
  CHECK_FALSE(sympl::multiplier(M(f3, 2, {0, 0, 0, 0})).has_value());
  CHECK_FALSE(sympl::multiplier(M(f3, 4, {1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1})).has_value());
  CHECK_THROWS_AS(sympl::multiplier(Matrix::identity(f3, 3)), Error);
  CHECK_THROWS_AS(SymplecticMatrix::checked(M(f3, 2, {1, 1, 1, 1})), Error);
}

TEST_CASE("multiplier agrees with the direct similitude check") {
  std::mt19937_64 rng(3);
  for (std::uint64_t p : {3, 5}) {
    auto f = Field::make(p);
    for (int i = 0; i < 3000; ++i) {
      std::vector<Elem> e(16);
      for (auto& x : e) x = rng() % p;
      auto lam = sympl::multiplier(M(f, 4, e));
      CHECK(lam.value_or(0) == oracle::similitude_factor(e, 4, p));
    }
    sympl::GroupEnumerator en(f, 2);
    for (int i = 0; i < 300; ++i) {
      const Elem l0 = 1 + rng() % (p - 1);
      auto m = en.random(l0, rng);
      CHECK(oracle::similitude_factor(m.entries(), 4, p) == l0);
    }
  }
}

TEST_CASE("multiplier is multiplicative") {
  std::mt19937_64 rng(4);
  for (std::uint64_t q : {3, 5, 4, 9}) {
    auto f = q == 4 ? Field::make(2, 2) : q == 9 ? Field::make(3, 2) : Field::make(q);
    sympl::GroupEnumerator en(f, 2);
    for (int i = 0; i < 200; ++i) {
      auto a = en.random(1 + rng() % (q - 1), rng);
      auto b = en.random(1 + rng() % (q - 1), rng);
      CHECK(sympl::multiplier(a * b) == f->mul(*sympl::multiplier(a), *sympl::multiplier(b)));
    }
  }
}

TEST_CASE("char_poly examples") {
  auto f3 = Field::make(3), f5 = Field::make(5);
  CHECK(sympl::char_poly(Matrix::identity(f3, 2)) == P(f3, {1, 1, 1}));  // (X - 1)^2 = X^2 + X + 1 over F_3
  CHECK(sympl::char_poly(M(f3, 2, {0, 2, 1, 0})) == P(f3, {1, 0, 1}));
  std::vector<Poly> fs{Poly::linear(f5, 2)};
  auto blk = sympl::companion_block(fs, 3);
  CHECK(blk.char_poly() == Poly::linear(f5, 2) * Poly::linear(f5, 4));
}

TEST_CASE("char_poly agrees with det(xI - m)") {
  std::mt19937_64 rng(6);
  for (std::uint64_t p : {5, 7}) {
    auto f = Field::make(p);
    for (std::size_t n : {2, 4, 6}) {
      for (int i = 0; i < 100; ++i) {
        std::vector<Elem> e(n * n);
        for (auto& x : e) x = rng() % p;
        if (i % 3 == 0)
          for (std::size_t k = 0; k < n * n; ++k) e[k] = (k % (n + 1) == 0 || rng() % 4 == 0) ? e[k] : 0;
        Poly chi = sympl::char_poly(M(f, n, e));
        REQUIRE(chi.degree() == static_cast<int>(n));
        CHECK(chi.is_monic());
        for (std::uint64_t x = 0; x < p; ++x) {
          oracle::IMat a(n * n);
          for (std::size_t k = 0; k < n * n; ++k) a[k] = (p - e[k]) % p;
          for (std::size_t d = 0; d < n; ++d) a[d * n + d] = (a[d * n + d] + x) % p;
          CHECK(chi.eval(x) == oracle::det(a, n, p));
        }
      }
    }
  }
}

TEST_CASE("similitude characteristic polynomial is self-reciprocal") {
  std::mt19937_64 rng(8);
  auto f = Field::make(5);
  sympl::GroupEnumerator en(f, 2);
  for (int i = 0; i < 300; ++i) {
    const Elem l0 = 1 + rng() % 4;
    auto chi = sympl::char_poly(en.random(l0, rng));
    CHECK(ff::lambda_reciprocal(chi, l0) == chi);
  }
}

TEST_CASE("Lagrangian enumeration") {
  for (std::uint64_t p : {2, 3, 5}) {
    auto f = Field::make(p);
    for (unsigned h = 1; h <= (p == 5 ? 2u : 3u); ++h) {
      sympl::LagrangianSet set(f, h);
      std::uint64_t expected = 1;
      for (unsigned i = 1; i <= h; ++i) expected *= oracle::pow_mod(p, i, ~0ULL) + 1;
      CHECK(set.size() == expected);
      for (std::size_t s = 0; s < set.size(); ++s) {
        auto b = set.basis(s);
        for (unsigned i = 0; i < h; ++i)
          for (unsigned j = 0; j < h; ++j)
            CHECK(sympl::symplectic_pairing(*f, b.subspan(i * 2 * h, 2 * h), b.subspan(j * 2 * h, 2 * h)) == 0);
      }
    }
  }
  CHECK_THROWS_AS(sympl::LagrangianSet(Field::make(101), 4), Error);
  CHECK(sympl::LagrangianSet::subspace_count(3, 1) == doctest::Approx(4));
}

TEST_CASE("brute-force split examples") {
  auto f3 = Field::make(3), f5 = Field::make(5);
  for (unsigned h = 1; h <= 3; ++h) CHECK(sympl::is_split_bruteforce(SymplecticMatrix::checked(Matrix::identity(f3, 2 * h))));
  auto rot = SymplecticMatrix::checked(M(f3, 2, {0, 2, 1, 0}));
  CHECK_FALSE(sympl::is_split_bruteforce(rot));
  CHECK_FALSE(split_oracle(rot.matrix().entries(), 2, 3));
  std::vector<Poly> fs{P(f5, {2, 1, 1})};
  CHECK(sympl::is_split_bruteforce(sympl::companion_block(fs, 1)));
}

TEST_CASE("charpoly split examples") {
  auto f3 = Field::make(3), f7 = Field::make(7);
  // chi = (X - 1)(X - lambda0) with lambda0 != 1
  for (Elem l0 = 2; l0 < 7; ++l0) {
    std::vector<Poly> fs{Poly::linear(f7, 1)};
    auto m = sympl::companion_block(fs, l0);
    CHECK(m.char_poly() == Poly::linear(f7, 1) * Poly::linear(f7, l0));
    CHECK(sympl::is_split_charpoly(m) == SplitVerdict::split);
  }
  CHECK(sympl::is_split_charpoly(SymplecticMatrix::checked(M(f3, 2, {0, 2, 1, 0}))) == SplitVerdict::not_split);
  // chi = (X - a)^2 from a non-diagonal Jordan block, lambda0 = a^2
  for (Elem a = 1; a < 7; ++a) {
    auto m = SymplecticMatrix::checked(M(f7, 2, {a, 1, 0, a}));
    CHECK(m.multiplier() == f7->mul(a, a));
    CHECK(m.char_poly() == Poly::linear(f7, a) * Poly::linear(f7, a));
    CHECK(sympl::is_split_charpoly(m) == SplitVerdict::split);
    CHECK(sympl::is_split_bruteforce(m));
  }
}

TEST_CASE("companion blocks") {
  auto f3 = Field::make(3), f5 = Field::make(5);
  std::vector<Poly> one{Poly::linear(f5, 1)};
  CHECK(sympl::companion_block(one, 1).matrix() == Matrix::identity(f5, 2));
  std::vector<Poly> two{Poly::linear(f5, 2)};
  auto m = sympl::companion_block(two, 3);
  CHECK(m.matrix() == M(f5, 2, {2, 0, 0, 4}));
  CHECK(m.multiplier() == 3);
  std::vector<Poly> ones{Poly::linear(f3, 1), Poly::linear(f3, 1)};
  auto d = sympl::companion_block(ones, 2);
  CHECK(d.matrix() == M(f3, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2}));
  CHECK(d.multiplier() == 2);

  std::vector<Poly> zero{Poly::x(f5)};
  CHECK_THROWS_AS(sympl::companion_block(zero, 1), Error);
  CHECK_THROWS_AS(sympl::companion_block(std::vector<Poly>{}, 1), Error);
  CHECK_THROWS_AS(sympl::companion_block(one, 0), Error);
}

TEST_CASE("companion blocks are split with the requested multiplier") {
  std::mt19937_64 rng(10);
  for (std::uint64_t q : {3, 5, 7, 4, 9}) {
    auto f = q == 4 ? Field::make(2, 2) : q == 9 ? Field::make(3, 2) : Field::make(q);
    for (unsigned h = 1; h <= 2; ++h) {
      for (const auto& part : comb::partitions(h)) {
        for (int trial = 0; trial < 10; ++trial) {
          std::vector<Poly> fs;
          for (unsigned d : part.parts) {
            Poly r = ff::random_irreducible(f, d, rng());
            while (r[0] == 0) r = ff::random_irreducible(f, d, rng());
            fs.push_back(r);
          }
          const Elem l0 = 1 + rng() % (q - 1);
          auto m = sympl::companion_block(fs, l0);
          CHECK(sympl::multiplier(m.matrix()) == l0);
          CHECK(sympl::is_split_bruteforce(m));
          CHECK(sympl::is_split_charpoly(m) == SplitVerdict::split);
        }
      }
    }
  }
}

TEST_CASE("split oracles agree on all of GSp_2(F_q)") {
  for (std::uint64_t p : {3, 5, 7}) {
    auto f = Field::make(p);
    sympl::LagrangianSet lag(f, 1);
    std::uint64_t agree = 0, total = 0;
    for (std::uint64_t code = 0; code < p * p * p * p; ++code) {
      std::vector<Elem> e{code % p, code / p % p, code / (p * p) % p, code / (p * p * p)};
      auto m = SymplecticMatrix::from_matrix(M(f, 2, e));
      if (!m) continue;
      ++total;
      const bool brute = sympl::is_split_bruteforce(*m, lag);
      const auto verdict = sympl::is_split_charpoly(*m);
      agree += verdict != SplitVerdict::unknown && is_split_verdict(verdict) == brute && brute == split_oracle(e, 2, p);
    }
    CHECK(total == (p * p - 1) * (p * p - p));
    CHECK(agree == total);
  }
}

TEST_CASE("split oracles agree on sampled GSp_4") {
  std::mt19937_64 rng(12);
  for (std::uint64_t p : {3, 5}) {
    auto f = Field::make(p);
    sympl::GroupEnumerator en(f, 2);
    sympl::LagrangianSet lag(f, 2);
    int bad = 0;
    const int samples = 10000;
    for (int i = 0; i < samples; ++i) {
      auto m = SymplecticMatrix::checked(en.random(1 + rng() % (p - 1), rng));
      const bool brute = sympl::is_split_bruteforce(m, lag);
      const auto verdict = sympl::is_split_charpoly(m);
      if (verdict == SplitVerdict::unknown || is_split_verdict(verdict) != brute) ++bad;
      if (p == 3 && i < 300 && brute != split_oracle(m.matrix().entries(), 4, p)) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("h = 3 over F_2") {
  std::mt19937_64 rng(13);
  auto f = Field::make(2);
  sympl::GroupEnumerator en(f, 3);
  sympl::LagrangianSet lag(f, 3);
  int separable = 0, unknown = 0;
  for (int i = 0; i < 1500; ++i) {
    auto m = SymplecticMatrix::checked(en.random(1, rng));
    const auto verdict = sympl::is_split_charpoly(m);
    if (ff::is_separable(m.char_poly())) {
      ++separable;
      CHECK(verdict != SplitVerdict::unknown);
      CHECK(is_split_verdict(verdict) == sympl::is_split_bruteforce(m, lag));
    } else {
      ++unknown;
      CHECK(verdict == SplitVerdict::unknown);
    }
  }
  CHECK(separable > 0);
  CHECK(unknown > 0);
}

TEST_CASE("split verdict on explicit characteristic polynomials") {
  auto f5 = Field::make(5);
  // (X - 2)(X - 3) is 1-reciprocal as the pair {X - 2, X - 3}
  Poly chi = Poly::linear(f5, 2) * Poly::linear(f5, 3);
  CHECK(sympl::factors_pair_up(chi, 1));
  CHECK(sympl::split_verdict(chi, 1, 1) == SplitVerdict::split);
  // X^2 + 2 is irreducible and self-reciprocal for lambda0 = 2: odd multiplicity
  Poly irr = P(f5, {2, 0, 1});
  CHECK_FALSE(sympl::factors_pair_up(irr, 2));
  CHECK(sympl::split_verdict(irr, 2, 1) == SplitVerdict::not_split);
  CHECK(sympl::factors_pair_up(irr * irr, 2));
}

TEST_CASE("centralizer orders and class sizes") {
  CHECK(sympl::centralizer_order_split_separable({{1}}, 3) == 4);
  CHECK(sympl::centralizer_order_split_separable({{1, 1}}, 3) == 8);
  CHECK(sympl::centralizer_order_split_separable({{2}}, 3) == 16);
  // conjugates of diag(1, 2) in GL_2(F_3): trace 0, determinant 2
  unsigned n = 0;
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      for (unsigned c = 0; c < 3; ++c)
        for (unsigned d = 0; d < 3; ++d) n += (a + d) % 3 == 0 && (a * d + 9 - b * c) % 3 == 2;
  CHECK(n == 12);
  CHECK(comb::gsp_order(3, 1) / sympl::centralizer_order_split_separable({{1}}, 3) == n);
}

TEST_CASE("tuple counts") {
  auto f3 = Field::make(3), f5 = Field::make(5);
  auto c31 = sympl::count_split_tuples({{1}}, f3, 1);
  CHECK(c31.tuples == 0);
  CHECK(c31.classes == 0);
  auto c51 = sympl::count_split_tuples({{1}}, f5, 1);
  CHECK(c51.tuples == 2);
  CHECK(c51.classes == 1);

  // oracle: tuples of roots a_i with {a_i, l0/a_i} all distinct, and
  // irreducible quadratics Q with Q != Q~
  for (std::uint64_t p : {3, 5, 7}) {
    auto f = Field::make(p);
    for (Elem l0 = 1; l0 < p; ++l0) {
      std::uint64_t pairs = 0;
      for (Elem a = 1; a < p; ++a)
        for (Elem b = 1; b < p; ++b) {
          std::set<Elem> s{a, b, f->div(l0, a), f->div(l0, b)};
          pairs += s.size() == 4;
        }
      auto c11 = sympl::count_split_tuples({{1, 1}}, f, l0);
      CHECK(c11.tuples == pairs);
      CHECK(c11.classes * 8 == c11.tuples);
      std::uint64_t quads = 0;
      for (const auto& q : oracle::irreducibles(p, 2)) {
        const Elem b = q[1], c = q[0];
        const Elem rb = f->div(f->mul(b, l0), c), rc = f->div(f->mul(l0, l0), c);
        quads += !(rb == b && rc == c);
      }
      auto c2 = sympl::count_split_tuples({{2}}, f, l0);
      CHECK(c2.tuples == quads);
      CHECK(c2.classes * 2 == c2.tuples);
    }
  }
}

TEST_CASE("census of small groups") {
  auto f3 = Field::make(3);
  auto rows = sympl::count_split_exhaustive(f3, 1, Elem{1});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].total == 24);
  CHECK(rows[0].lambda0 == 1);

  auto gsp4 = sympl::count_split_exhaustive(f3, 2);
  REQUIRE(gsp4.size() == 2);
  std::uint64_t total = 0, split = 0;
  for (const auto& r : gsp4) {
    total += r.total;
    split += r.split_sep + r.split_insep;
    CHECK(r.total == comb::sp_order(3, 2));
  }
  CHECK(total == 103680);
  CHECK(split == 57024);
  CHECK(sympl::count_split_gsp4_formula(3) == split);
  CHECK(sympl::count_split_exhaustive(f3, 2, std::nullopt, 3) == gsp4);

  CHECK_THROWS_AS(sympl::count_split_exhaustive(f3, 2, Elem{0}), Error);
}

TEST_CASE("census cross-checks against direct classification for GSp_2") {
  for (std::uint64_t p : {3, 5, 7}) {
    auto f = Field::make(p);
    auto rows = sympl::count_split_exhaustive(f, 1);
    REQUIRE(rows.size() == p - 1);
    for (const auto& r : rows) {
      std::uint64_t sep = 0, insep = 0, tot = 0;
      for (std::uint64_t code = 0; code < p * p * p * p; ++code) {
        std::vector<Elem> e{code % p, code / p % p, code / (p * p) % p, code / (p * p * p)};
        if (oracle::similitude_factor(e, 2, p) != r.lambda0) continue;
        ++tot;
        if (!split_oracle(e, 2, p)) continue;
        // separable iff discriminant tr^2 - 4 det is nonzero
        const std::uint64_t tr = (e[0] + e[3]) % p, dt = (e[0] * e[3] + p * p - e[1] * e[2]) % p;
        ((tr * tr + 4 * p * p - 4 * dt) % p ? sep : insep) += 1;
      }
      CHECK(r.total == tot);
      CHECK(r.split_sep == sep);
      CHECK(r.split_insep == insep);
    }
  }
}

TEST_CASE("enumeration methods agree for h = 1") {
  for (std::uint64_t q : {3, 4, 5}) {
    auto f = q == 4 ? Field::make(2, 2) : Field::make(q);
    for (Elem l0 = 1; l0 < q; ++l0) {
      std::set<std::vector<Elem>> scan, basis;
      sympl::GroupEnumerator(f, 1, sympl::GroupEnumerator::Method::matrix_scan).for_each(l0, 0, 1, [&](const Matrix& m) {
        scan.insert(m.entries());
      });
      sympl::GroupEnumerator(f, 1).for_each(l0, 0, 1, [&](const Matrix& m) { basis.insert(m.entries()); });
      CHECK(scan == basis);
      CHECK(scan.size() == comb::sp_order(q, 1));
    }
  }
  CHECK_THROWS_AS(sympl::GroupEnumerator(Field::make(3), 2, sympl::GroupEnumerator::Method::matrix_scan), Error);
}

TEST_CASE("enumeration shards partition the fibre") {
  auto f = Field::make(3);
  sympl::GroupEnumerator en(f, 2);
  std::set<std::vector<Elem>> all;
  std::uint64_t visits = 0;
  for (unsigned s = 0; s < 4; ++s) {
    en.for_each(2, s, 4, [&](const Matrix& m) {
      ++visits;
      all.insert(m.entries());
      CHECK(sympl::multiplier(m) == Elem{2});
    });
  }
  CHECK(visits == 51840);
  CHECK(all.size() == 51840);
}

TEST_CASE("fibres have equal size") {
  for (std::uint64_t q : {3, 5}) {
    auto f = Field::make(q);
    for (const auto& r : sympl::count_split_exhaustive(f, 1)) CHECK(r.total == comb::sp_order(q, 1));
  }
}

TEST_CASE("class sizes account for the separable split locus") {
  auto check_ledger = [](const ff::FieldPtr& f, unsigned h) {
    const std::uint64_t q = f->order();
    for (const auto& row : sympl::count_split_exhaustive(f, h)) {
      comb::BigInt from_classes = 0;
      for (const auto& part : comb::partitions(h)) {
        auto c = sympl::count_split_tuples(part, f, row.lambda0);
        from_classes += c.classes * (comb::gsp_order(q, h) / sympl::centralizer_order_split_separable(part, q));
      }
      CHECK(from_classes == row.split_sep);
    }
  };
  check_ledger(Field::make(3), 1);
  check_ledger(Field::make(5), 1);
  check_ledger(Field::make(3), 2);
}

TEST_CASE("exact GSp_4 formula") {
  CHECK(sympl::count_split_gsp4_formula(3) == 57024);
  CHECK(sympl::count_split_gsp4_formula(5) == comb::BigInt(596) * 6 * 64 * 625 / 8);
  CHECK_THROWS_AS(sympl::count_split_gsp4_formula(2), Error);
  CHECK_THROWS_AS(sympl::count_split_gsp4_formula(9), Error);
  const std::uint64_t l = 101;
  comb::Rational lead = comb::alpha(2) * comb::Rational(boost::multiprecision::pow(comb::BigInt(l), 10) * (l - 1));
  double ratio = (comb::Rational(sympl::count_split_gsp4_formula(l)) / lead).convert_to<double>();
  CHECK(ratio == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("enumeration guard") {
  sympl::GroupEnumerator en(Field::make(11), 2);
  std::size_t seen = 0;
  CHECK_THROWS_AS(en.for_each(1, 0, 1, [&](const Matrix&) { ++seen; }), Error);
  CHECK(seen == 0);
  std::mt19937_64 rng(1);
  CHECK(sympl::multiplier(en.random(3, rng)) == 3);
}

TEST_CASE("asymptotic counts") {
  for (std::uint64_t q : {3, 5, 7, 11}) CHECK(sympl::count_split_asymptotic(q, 1) == comb::Rational(q * q * q, 2));
  CHECK(sympl::count_split_asymptotic(3, 2) == comb::Rational(3 * 59049, 8));
  CHECK(sympl::count_split_asymptotic(3, 2).convert_to<double>() == doctest::Approx(22143.375));
  CHECK(sympl::count_split_asymptotic(2, 3) == comb::Rational(5 * (1 << 21), 16));
}

TEST_CASE("census CSV") {
  auto f9 = Field::make(3, 2);
  std::vector<sympl::CensusRow> rows{{9, 1, 1, 270, 162, 720}};
  CHECK(sympl::census_csv(rows, *f9) == "# field: q=3^2;modulus=1,0,1\nq,h,lambda0,split_sep,split_insep,total\n9,1,1,270,162,720\n");
}

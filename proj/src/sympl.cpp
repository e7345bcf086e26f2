#include "elkies/sympl.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

#include "elkies/error.hpp"
#include "elkies/modarith.hpp"

namespace elkies::sympl {

using ff::Field;

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n), a_(n * n, 0) {
  if (!field_) fail(Errc::invalid_argument, "null field");
}

Matrix::Matrix(FieldPtr field, std::size_t n, std::vector<Elem> entries)
    : field_(std::move(field)), n_(n), a_(std::move(entries)) {
  if (!field_) fail(Errc::invalid_argument, "null field");
  if (a_.size() != n * n) fail(Errc::invalid_argument, "matrix entry count does not match its size");
  for (auto x : a_) {
    if (!field_->valid(x)) fail(Errc::invalid_argument, "matrix entry out of range");
  }
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) { return scalar(std::move(field), n, 1); }

Matrix Matrix::scalar(FieldPtr field, std::size_t n, Elem a) {
  Matrix m(std::move(field), n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = a;
  return m;
}

Matrix Matrix::standard_form(FieldPtr field, unsigned h) {
  Matrix j(field, 2 * h);
  Elem minus_one = field->neg(1);
  for (unsigned i = 0; i < h; ++i) {
    j(i, h + i) = 1;
    j(h + i, i) = minus_one;
  }
  return j;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) fail(Errc::invalid_argument, "matrix size mismatch");
  if (a.field_ != b.field_ && !(*a.field_ == *b.field_)) fail(Errc::context_mismatch, "matrices over different fields");
  const auto& f = *a.field_;
  Matrix out(a.field_, a.n_);
  for (std::size_t r = 0; r < a.n_; ++r) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      Elem x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < a.n_; ++c) out(r, c) = f.add(out(r, c), f.mul(x, b(k, c)));
    }
  }
  return out;
}

namespace {

// Gauss-Jordan inverse; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m) {
  const auto& f = *m.field();
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv = Matrix::identity(m.field(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    }
    Elem s = f.inv(a(col, col));
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) = f.mul(a(col, c), s);
      inv(col, c) = f.mul(inv(col, c), s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Elem u = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) = f.sub(a(r, c), f.mul(u, a(col, c)));
        inv(r, c) = f.sub(inv(r, c), f.mul(u, inv(col, c)));
      }
    }
  }
  return inv;
}

}  // namespace

// ---------------------------------------------------------------------------
// Multiplier and characteristic polynomial

Elem symplectic_pairing(const Field& f, std::span<const Elem> u, std::span<const Elem> v) {
  const std::size_t h = u.size() / 2;
  Elem acc = 0;
  for (std::size_t i = 0; i < h; ++i) {
    acc = f.add(acc, f.mul(u[i], v[h + i]));
    acc = f.sub(acc, f.mul(u[h + i], v[i]));
  }
  return acc;
}

std::optional<Elem> multiplier(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0 || n % 2) fail(Errc::invalid_argument, "multiplier needs a square matrix of even size");
  const auto& f = *m.field();
  const std::size_t h = n / 2;
  std::vector<std::vector<Elem>> cols(n, std::vector<Elem>(n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) cols[c][r] = m(r, c);
  // (m^T J m)_{ij} = psi(col_i, col_j)
  const Elem lambda = symplectic_pairing(f, cols[0], cols[h]);
  if (lambda == 0) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Elem want = (j == i + h && i < h) ? lambda : 0;
      if (symplectic_pairing(f, cols[i], cols[j]) != want) return std::nullopt;
    }
  }
  return lambda;
}

Poly char_poly(const Matrix& m) {
  const auto& f = *m.field();
  const std::size_t n = m.size();
  Matrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    Elem inv_p = f.inv(h(j + 1, j));
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h(k, j) == 0) continue;
      Elem u = f.mul(h(k, j), inv_p);
      for (std::size_t c = 0; c < n; ++c) h(k, c) = f.sub(h(k, c), f.mul(u, h(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = f.add(h(r, j + 1), f.mul(u, h(r, k)));
    }
  }
  const auto& field = m.field();
  std::vector<Poly> p{Poly::constant(field, 1)};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly next = Poly(field, {f.neg(h(k - 1, k - 1)), 1}) * p[k - 1];
    Elem t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = f.mul(t, h(i, i - 1));
      if (t == 0) break;
      Elem coef = f.mul(t, h(i - 1, k - 1));
      if (coef != 0) next = next - p[i - 1].scaled(coef);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

std::optional<SymplecticMatrix> SymplecticMatrix::from_matrix(Matrix m) {
  auto lambda = sympl::multiplier(m);
  if (!lambda) return std::nullopt;
  return SymplecticMatrix(std::move(m), *lambda);
}

SymplecticMatrix SymplecticMatrix::checked(Matrix m) {
  auto s = from_matrix(std::move(m));
  if (!s) fail(Errc::domain, "matrix is not a symplectic similitude");
  return *s;
}

// ---------------------------------------------------------------------------
// Lagrangian subspaces

double LagrangianSet::subspace_count(std::uint64_t q, unsigned h) {
  double out = 1;
  const double dq = static_cast<double>(q);
  for (unsigned i = 0; i < h; ++i) out *= (std::pow(dq, 2 * h - i) - 1) / (std::pow(dq, i + 1) - 1);
  return out;
}

LagrangianSet::LagrangianSet(FieldPtr field, unsigned h) : field_(std::move(field)), h_(h) {
  if (h < 1) fail(Errc::invalid_argument, "half dimension must be >= 1");
  const std::uint64_t q = field_->order();
  if (subspace_count(q, h) > kMaxSubspaces) {
    fail(Errc::infeasible, "Lagrangian enumeration over F_" + std::to_string(q) + " with h=" + std::to_string(h) +
                               " exceeds the subspace guard");
  }
  const auto& f = *field_;
  const unsigned n = 2 * h;
  std::vector<unsigned> piv(h);
  for (unsigned i = 0; i < h; ++i) piv[i] = i;
  while (true) {
    // Free slots: row r, column c > piv[r] with c not a pivot column.
    std::vector<std::pair<unsigned, unsigned>> slots;
    for (unsigned r = 0; r < h; ++r)
      for (unsigned c = piv[r] + 1; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(r, c);
    std::vector<Elem> digits(slots.size(), 0);
    std::vector<Elem> rows(h * n);
    while (true) {
      std::fill(rows.begin(), rows.end(), 0);
      for (unsigned r = 0; r < h; ++r) rows[r * n + piv[r]] = 1;
      for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first * n + slots[s].second] = digits[s];
      bool isotropic = true;
      for (unsigned a = 0; a < h && isotropic; ++a)
        for (unsigned b = a + 1; b < h && isotropic; ++b)
          isotropic = symplectic_pairing(f, std::span<const Elem>(&rows[a * n], n), std::span<const Elem>(&rows[b * n], n)) == 0;
      if (isotropic) {
        pivots_.push_back(piv);
        bases_.insert(bases_.end(), rows.begin(), rows.end());
      }
      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == q) digits[s++] = 0;
      if (s == digits.size()) break;
    }
    // Next pivot combination.
    int i = static_cast<int>(h) - 1;
    while (i >= 0 && piv[i] == n - h + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++piv[i];
    for (unsigned k = static_cast<unsigned>(i) + 1; k < h; ++k) piv[k] = piv[k - 1] + 1;
  }
}

std::span<const Elem> LagrangianSet::basis(std::size_t i) const {
  const std::size_t block = static_cast<std::size_t>(h_) * 2 * h_;
  return std::span<const Elem>(bases_.data() + i * block, block);
}

bool LagrangianSet::stable(const Matrix& m, std::size_t i) const {
  const auto& f = *field_;
  const unsigned n = 2 * h_;
  const auto rows = basis(i);
  const auto& piv = pivots_[i];
  Elem w[64];
  for (unsigned r = 0; r < h_; ++r) {
    const Elem* v = &rows[r * n];
    for (unsigned a = 0; a < n; ++a) {
      Elem acc = 0;
      for (unsigned b = 0; b < n; ++b) {
        if (v[b] != 0) acc = f.add(acc, f.mul(m(a, b), v[b]));
      }
      w[a] = acc;
    }
    // w lies in the row space iff w - sum_r w[piv_r] row_r vanishes.
    for (unsigned k = 0; k < h_; ++k) {
      Elem c = w[piv[k]];
      if (c == 0) continue;
      const Elem* row = &rows[k * n];
      for (unsigned a = 0; a < n; ++a) {
        if (row[a] != 0) w[a] = f.sub(w[a], f.mul(c, row[a]));
      }
    }
    for (unsigned a = 0; a < n; ++a) {
      if (w[a] != 0) return false;
    }
  }
  return true;
}

bool LagrangianSet::any_stable(const Matrix& m) const {
  if (m.size() != 2 * h_) fail(Errc::invalid_argument, "matrix size does not match the Lagrangian set");
  for (std::size_t i = 0; i < size(); ++i) {
    if (stable(m, i)) return true;
  }
  return false;
}

bool is_split_bruteforce(const SymplecticMatrix& m) {
  LagrangianSet set(m.field(), m.half_dim());
  return set.any_stable(m.matrix());
}

bool is_split_bruteforce(const SymplecticMatrix& m, const LagrangianSet& lagrangians) {
  if (lagrangians.half_dim() != m.half_dim()) fail(Errc::invalid_argument, "Lagrangian set has the wrong dimension");
  return lagrangians.any_stable(m.matrix());
}

// ---------------------------------------------------------------------------
// Characteristic-polynomial split test

bool factors_pair_up(const Poly& chi, Elem lambda0) {
  auto fz = ff::factor(chi);
  std::map<Poly, unsigned> mult;
  for (const auto& fac : fz.factors) mult[fac.poly] = fac.multiplicity;
  for (auto& [q, k] : mult) {
    if (k == 0) continue;
    if (q[0] == 0) fail(Errc::domain, "characteristic polynomial has a zero root");
    Poly r = ff::lambda_reciprocal(q, lambda0);
    if (r == q) {
      if (k % 2) return false;
      k = 0;
      continue;
    }
    auto it = mult.find(r);
    if (it == mult.end() || it->second != k) return false;
    it->second = 0;
    k = 0;
  }
  return true;
}

SplitVerdict split_verdict(const Poly& chi, Elem lambda0, unsigned h) {
  if (chi.degree() != static_cast<int>(2 * h)) fail(Errc::invalid_argument, "characteristic polynomial has the wrong degree");
  if (!ff::is_separable(chi) && h > 2) return SplitVerdict::unknown;
  return factors_pair_up(chi, lambda0) ? SplitVerdict::split : SplitVerdict::not_split;
}

SplitVerdict is_split_charpoly(const SymplecticMatrix& m) {
  return split_verdict(m.char_poly(), m.multiplier(), m.half_dim());
}

// ---------------------------------------------------------------------------
// Companion blocks

Matrix companion(const Poly& p) {
  if (!p.is_monic() || p.degree() < 1) fail(Errc::invalid_argument, "companion matrix needs a monic nonconstant polynomial");
  const auto& f = *p.field();
  const std::size_t n = static_cast<std::size_t>(p.degree());
  Matrix c(p.field(), n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = f.neg(p[i]);
  return c;
}

SymplecticMatrix companion_block(std::span<const Poly> factors, Elem lambda0) {
  if (factors.empty()) fail(Errc::invalid_argument, "companion_block needs at least one factor");
  const auto& field = factors.front().field();
  const auto& f = *field;
  if (lambda0 == 0) fail(Errc::domain, "multiplier must be nonzero");
  std::size_t h = 0;
  for (const auto& p : factors) {
    if (!p.is_monic() || p.degree() < 1) fail(Errc::invalid_argument, "companion_block factors must be monic and nonconstant");
    if (p[0] == 0) fail(Errc::domain, "companion_block factor has zero constant term");
    h += static_cast<std::size_t>(p.degree());
  }
  Matrix m(field, 2 * h);
  std::size_t off = 0;
  for (const auto& p : factors) {
    Matrix c = companion(p);
    Matrix ct_inv = *inverse(c.transpose());
    const std::size_t d = c.size();
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t col = 0; col < d; ++col) {
        m(off + r, off + col) = c(r, col);
        m(h + off + r, h + off + col) = f.mul(lambda0, ct_inv(r, col));
      }
    }
    off += d;
  }
  return SymplecticMatrix::checked(std::move(m));
}

// ---------------------------------------------------------------------------
// Class counting

BigInt centralizer_order_split_separable(const comb::Partition& partition, std::uint64_t q) {
  BigInt out = BigInt(q) - 1;
  for (auto d : partition.parts) out *= boost::multiprecision::pow(BigInt(q), d) - 1;
  return out;
}

SplitTupleCount count_split_tuples(const comb::Partition& partition, const FieldPtr& field, Elem lambda0) {
  if (lambda0 == 0 || !field->valid(lambda0)) fail(Errc::invalid_argument, "lambda0 must be a nonzero field element");
  if (partition.parts.empty()) fail(Errc::invalid_argument, "empty partition");
  const unsigned maxd = *std::max_element(partition.parts.begin(), partition.parts.end());
  if (std::pow(static_cast<double>(field->order()), maxd) > 1e7) fail(Errc::infeasible, "irreducible enumeration exceeds guard");

  struct Candidate {
    Poly poly;
    Poly recip;
  };
  std::map<unsigned, std::vector<Candidate>> by_degree;
  for (auto d : partition.parts) {
    if (by_degree.count(d)) continue;
    auto& list = by_degree[d];
    for (auto& p : ff::monic_irreducibles(field, d)) {
      if (p[0] == 0) continue;
      Poly r = ff::lambda_reciprocal(p, lambda0);
      list.push_back({std::move(p), std::move(r)});
    }
  }
  double tuples = 1;
  for (auto d : partition.parts) tuples *= static_cast<double>(by_degree[d].size());
  if (tuples > 1e8) fail(Errc::infeasible, "tuple enumeration exceeds guard");

  const std::size_t r = partition.parts.size();
  std::vector<std::size_t> idx(r, 0);
  BigInt count = 0;
  bool any = true;
  for (auto d : partition.parts) any = any && !by_degree[d].empty();
  while (any) {
    Poly prod = Poly::constant(field, 1);
    for (std::size_t i = 0; i < r; ++i) {
      const auto& cand = by_degree[partition.parts[i]][idx[i]];
      prod = prod * cand.poly * cand.recip;
    }
    if (ff::is_separable(prod)) ++count;
    std::size_t i = 0;
    while (i < r && ++idx[i] == by_degree[partition.parts[i]].size()) idx[i++] = 0;
    if (i == r) break;
  }
  BigInt fiber = (BigInt(1) << r) * partition.multiplicity_factorials();
  if (count % fiber != 0) fail(Errc::internal, "tuple count is not divisible by the fiber size");
  return {count, count / fiber};
}

// ---------------------------------------------------------------------------
// Group enumeration

namespace {

// Solutions of A v = b over F_q as x0 + span(kernel).
struct AffineSpace {
  std::vector<Elem> x0;
  std::vector<std::vector<Elem>> kernel;
  bool empty = false;
};

AffineSpace solve(const Field& f, std::vector<std::vector<Elem>> rows, std::vector<Elem> rhs, std::size_t n) {
  AffineSpace out;
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::swap(rhs[piv], rhs[rank]);
    Elem s = f.inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = f.mul(x, s);
    rhs[rank] = f.mul(rhs[rank], s);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Elem u = rows[r][col];
      for (std::size_t c = 0; c < n; ++c) rows[r][c] = f.sub(rows[r][c], f.mul(u, rows[rank][c]));
      rhs[r] = f.sub(rhs[r], f.mul(u, rhs[rank]));
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rhs[r] != 0) {
      out.empty = true;
      return out;
    }
  }
  out.x0.assign(n, 0);
  for (std::size_t r = 0; r < rank; ++r) out.x0[pivot_col[r]] = rhs[r];
  for (std::size_t col = 0; col < n; ++col) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(col)) != pivot_col.end()) continue;
    std::vector<Elem> k(n, 0);
    k[col] = 1;
    for (std::size_t r = 0; r < rank; ++r) k[pivot_col[r]] = f.neg(rows[r][col]);
    out.kernel.push_back(std::move(k));
  }
  return out;
}

// Row psi(c, .) as a linear functional.
std::vector<Elem> pairing_row(const Field& f, const std::vector<Elem>& c, unsigned h) {
  std::vector<Elem> a(2 * h);
  for (unsigned t = 0; t < h; ++t) {
    a[t] = f.neg(c[t + h]);
    a[t + h] = c[t];
  }
  return a;
}

// Constraint system for basis image number `level` (e_0, f_0, e_1, f_1, ...).
AffineSpace level_space(const Field& f, unsigned h, unsigned level, const std::vector<std::vector<Elem>>& es,
                        const std::vector<std::vector<Elem>>& fs) {
  const unsigned j = level / 2;
  const bool is_e = level % 2 == 0;
  std::vector<std::vector<Elem>> rows;
  std::vector<Elem> rhs;
  for (unsigned i = 0; i < j; ++i) {
    rows.push_back(pairing_row(f, es[i], h));
    rhs.push_back(0);
    rows.push_back(pairing_row(f, fs[i], h));
    rhs.push_back(0);
  }
  if (!is_e) {
    rows.push_back(pairing_row(f, es[j], h));
    rhs.push_back(1);
  }
  if (rows.empty()) {
    AffineSpace all;
    all.x0.assign(2 * h, 0);
    for (unsigned c = 0; c < 2 * h; ++c) {
      std::vector<Elem> k(2 * h, 0);
      k[c] = 1;
      all.kernel.push_back(std::move(k));
    }
    return all;
  }
  return solve(f, std::move(rows), std::move(rhs), 2 * h);
}

// Visits every point of an affine space in a fixed order.
template <class Fn>
void for_each_point(const Field& f, const AffineSpace& s, Fn&& fn) {
  const std::uint64_t q = f.order();
  const std::size_t k = s.kernel.size();
  std::vector<Elem> coef(k, 0);
  std::vector<Elem> v(s.x0.size());
  while (true) {
    v = s.x0;
    for (std::size_t i = 0; i < k; ++i) {
      if (coef[i] == 0) continue;
      for (std::size_t t = 0; t < v.size(); ++t) v[t] = f.add(v[t], f.mul(coef[i], s.kernel[i][t]));
    }
    fn(v);
    std::size_t i = 0;
    while (i < k && ++coef[i] == q) coef[i++] = 0;
    if (i == k) break;
  }
}

bool is_zero_vec(const std::vector<Elem>& v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

}  // namespace

GroupEnumerator::GroupEnumerator(FieldPtr field, unsigned h, Method method) : field_(std::move(field)), h_(h), method_(method) {
  if (h < 1) fail(Errc::invalid_argument, "half dimension must be >= 1");
  if (method_ == Method::matrix_scan && h != 1) fail(Errc::invalid_argument, "matrix scan enumeration is only for h = 1");
}

void GroupEnumerator::for_each(Elem lambda0, unsigned shard, unsigned shards,
                               const std::function<void(const Matrix&)>& visit) const {
  if (shards == 0 || shard >= shards) fail(Errc::invalid_argument, "bad shard index");
  double order = std::pow(static_cast<double>(field_->order()), h_ * h_);
  for (unsigned i = 1; i <= h_; ++i) order *= std::pow(static_cast<double>(field_->order()), 2 * i) - 1;
  if (order > kMaxElements) fail(Errc::infeasible, "group enumeration exceeds the element guard");
  if (lambda0 == 0 || !field_->valid(lambda0)) fail(Errc::invalid_argument, "lambda0 must be a nonzero field element");
  const auto& f = *field_;
  const std::uint64_t q = f.order();
  if (method_ == Method::matrix_scan) {
    Matrix m(field_, 2);
    std::uint64_t first = 0;
    for (Elem a = 0; a < q; ++a) {
      for (Elem c = 0; c < q; ++c, ++first) {
        if (first % shards != shard) continue;
        for (Elem b = 0; b < q; ++b) {
          for (Elem d = 0; d < q; ++d) {
            if (f.sub(f.mul(a, d), f.mul(b, c)) != lambda0) continue;
            m(0, 0) = a;
            m(0, 1) = b;
            m(1, 0) = c;
            m(1, 1) = d;
            visit(m);
          }
        }
      }
    }
    return;
  }

  const unsigned h = h_;
  const unsigned n = 2 * h;
  std::vector<std::vector<Elem>> es(h), fs(h);
  Matrix m(field_, n);
  std::uint64_t first_index = 0;
  std::function<void(unsigned)> recurse = [&](unsigned level) {
    if (level == n) {
      for (unsigned t = 0; t < h; ++t) {
        for (unsigned r = 0; r < n; ++r) {
          m(r, t) = f.mul(es[t][r], lambda0);
          m(r, h + t) = fs[t][r];
        }
      }
      visit(m);
      return;
    }
    AffineSpace space = level_space(f, h, level, es, fs);
    if (space.empty) return;
    const bool is_e = level % 2 == 0;
    for_each_point(f, space, [&](const std::vector<Elem>& v) {
      if (is_e && is_zero_vec(v)) return;
      if (level == 0 && first_index++ % shards != shard) return;
      (is_e ? es : fs)[level / 2] = v;
      recurse(level + 1);
    });
  };
  recurse(0);
}

Matrix GroupEnumerator::random(Elem lambda0, std::mt19937_64& rng) const {
  if (lambda0 == 0 || !field_->valid(lambda0)) fail(Errc::invalid_argument, "lambda0 must be a nonzero field element");
  const auto& f = *field_;
  const unsigned h = h_;
  const unsigned n = 2 * h;
  std::uniform_int_distribution<Elem> dist(0, f.order() - 1);
  std::vector<std::vector<Elem>> es(h), fs(h);
  for (unsigned level = 0; level < n; ++level) {
    AffineSpace s = level_space(f, h, level, es, fs);
    const bool is_e = level % 2 == 0;
    std::vector<Elem> v;
    do {
      v = s.x0;
      for (const auto& k : s.kernel) {
        Elem c = dist(rng);
        for (unsigned t = 0; t < n; ++t) v[t] = f.add(v[t], f.mul(c, k[t]));
      }
    } while (is_e && is_zero_vec(v));
    (is_e ? es : fs)[level / 2] = std::move(v);
  }
  Matrix m(field_, n);
  for (unsigned t = 0; t < h; ++t) {
    for (unsigned r = 0; r < n; ++r) {
      m(r, t) = f.mul(es[t][r], lambda0);
      m(r, h + t) = fs[t][r];
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Census

std::vector<CensusRow> count_split_exhaustive(const FieldPtr& field, unsigned h, std::optional<Elem> lambda0,
                                              unsigned shards) {
  if (shards == 0) fail(Errc::invalid_argument, "shard count must be >= 1");
  const auto method = h == 1 ? GroupEnumerator::Method::matrix_scan : GroupEnumerator::Method::symplectic_basis;
  GroupEnumerator group(field, h, method);
  const LagrangianSet lagrangians(field, h);
  std::vector<Elem> lambdas;
  if (lambda0) {
    if (*lambda0 == 0 || !field->valid(*lambda0)) fail(Errc::invalid_argument, "lambda0 must be a nonzero field element");
    lambdas.push_back(*lambda0);
  } else {
    for (Elem a = 1; a < field->order(); ++a) lambdas.push_back(a);
  }

  std::vector<CensusRow> out;
  for (Elem lam : lambdas) {
    std::vector<CensusRow> partial(shards, CensusRow{field->order(), h, lam, 0, 0, 0});
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(shards);
    for (unsigned s = 0; s < shards; ++s) {
      workers.emplace_back([&, s] {
        try {
          auto& row = partial[s];
          group.for_each(lam, s, shards, [&](const Matrix& m) {
            ++row.total;
            if (!lagrangians.any_stable(m)) return;
            if (ff::is_separable(char_poly(m)))
              ++row.split_sep;
            else
              ++row.split_insep;
          });
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    CensusRow row{field->order(), h, lam, 0, 0, 0};
    for (const auto& p : partial) {
      row.split_sep += p.split_sep;
      row.split_insep += p.split_insep;
      row.total += p.total;
    }
    out.push_back(row);
  }
  return out;
}

std::string census_csv(std::span<const CensusRow> rows, const ff::Field& field) {
  std::ostringstream os;
  os << "# field: " << field.header() << "\n";
  os << "q,h,lambda0,split_sep,split_insep,total\n";
  for (const auto& r : rows) {
    os << r.q << ',' << r.h << ',' << r.lambda0 << ',' << r.split_sep << ',' << r.split_insep << ',' << r.total << '\n';
  }
  return os.str();
}

BigInt count_split_gsp4_formula(std::uint64_t ell) {
  if (ell == 2) fail(Errc::invalid_argument, "the GSp_4 split count is for odd primes");
  if (!modarith::is_prime(ell)) fail(Errc::invalid_argument, std::to_string(ell) + " is not prime");
  BigInt l = ell;
  BigInt v = (3 * l * l * l + 7 * l * l + 7 * l + 11) * (l + 1) * (l - 1) * (l - 1) * (l - 1) * l * l * l * l;
  return v / 8;
}

Rational count_split_asymptotic(std::uint64_t q, unsigned h) {
  return comb::alpha(h) * Rational(boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(comb::f(h) - 1)));
}

}  // namespace elkies::sympl

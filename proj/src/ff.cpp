#include "elkies/ff.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <sstream>

#include "elkies/error.hpp"
#include "elkies/modarith.hpp"

namespace elkies::ff {

namespace ma = elkies::modarith;

namespace {

constexpr std::uint64_t kTableLimit = 256;
constexpr std::uint64_t kOrderLimit = std::uint64_t{1} << 62;

using Digits = std::array<std::uint64_t, 64>;

// Irreducibility over F_p of a monic coefficient vector, via the Poly machinery
// over the prime field.
bool prime_field_irreducible(const FieldPtr& fp, const std::vector<std::uint64_t>& coeffs) {
  return is_irreducible(Poly(fp, coeffs));
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field::Field(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), e_(static_cast<unsigned>(modulus.size() - 1)), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < e_; ++i) q_ *= p_;
  if (q_ > kTableLimit) return;
  add_table_.resize(q_ * q_);
  mul_table_.resize(q_ * q_);
  inv_table_.assign(q_, 0);
  for (Elem a = 0; a < q_; ++a) {
    for (Elem b = 0; b < q_; ++b) {
      Digits da{}, db{};
      Elem x = a, y = b;
      for (unsigned i = 0; i < e_; ++i) {
        da[i] = x % p_;
        db[i] = y % p_;
        x /= p_;
        y /= p_;
      }
      Elem s = 0;
      for (unsigned i = e_; i-- > 0;) s = s * p_ + (da[i] + db[i]) % p_;
      add_table_[a * q_ + b] = static_cast<std::uint16_t>(s);
      mul_table_[a * q_ + b] = static_cast<std::uint16_t>(mul_slow(a, b));
    }
  }
  for (Elem a = 1; a < q_; ++a) {
    for (Elem b = 1; b < q_; ++b) {
      if (mul_table_[a * q_ + b] == 1) {
        inv_table_[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
}

FieldPtr Field::make(std::uint64_t p, unsigned e) {
  if (!ma::is_prime(p)) fail(Errc::invalid_argument, "field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) fail(Errc::invalid_argument, "extension degree must be >= 1");
  if (e == 1) {
    if (p >= kOrderLimit) fail(Errc::invalid_argument, "prime too large (must be < 2^62)");
    return FieldPtr(new Field(p, {0, 1}));
  }
  auto prime = make(p, 1);
  // Odometer over (c_0, ..., c_{e-1}) with c_0 the most significant digit, so
  // candidates appear in lexicographic order constant term first.
  std::vector<std::uint64_t> c(e + 1, 0);
  c[e] = 1;
  while (true) {
    if (c[0] != 0 && prime_field_irreducible(prime, c)) return make(p, c);
    unsigned i = e;
    while (i-- > 0) {
      if (++c[i] < p) break;
      c[i] = 0;
      if (i == 0) fail(Errc::internal, "no irreducible polynomial found");
    }
  }
}

FieldPtr Field::make(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (!ma::is_prime(p)) fail(Errc::invalid_argument, "field characteristic " + std::to_string(p) + " is not prime");
  if (modulus.size() < 2 || modulus.back() != 1) fail(Errc::invalid_argument, "modulus must be monic of degree >= 1");
  for (auto c : modulus) {
    if (c >= p) fail(Errc::invalid_argument, "modulus coefficient out of range");
  }
  unsigned e = static_cast<unsigned>(modulus.size() - 1);
  // q < 2^62
  long double q = 1;
  for (unsigned i = 0; i < e; ++i) q *= static_cast<long double>(p);
  if (q >= static_cast<long double>(kOrderLimit)) fail(Errc::invalid_argument, "field order too large (must be < 2^62)");
  if (e == 1) {
    // Any monic linear modulus gives the same field; normalise to X.
    return FieldPtr(new Field(p, {0, 1}));
  }
  if (!prime_field_irreducible(make(p, 1), modulus)) fail(Errc::invalid_argument, "modulus is not irreducible");
  return FieldPtr(new Field(p, std::move(modulus)));
}

Elem Field::from_int(std::int64_t v) const { return ma::reduce(v, p_); }

Elem Field::from_coords(std::span<const std::uint64_t> coords) const {
  if (coords.size() > e_) fail(Errc::invalid_argument, "too many coordinates for field");
  Elem code = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= p_) fail(Errc::invalid_argument, "coordinate out of range");
    code = code * p_ + coords[i];
  }
  return code;
}

std::vector<std::uint64_t> Field::coords(Elem a) const {
  std::vector<std::uint64_t> out(e_);
  for (unsigned i = 0; i < e_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Elem Field::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  if (e_ == 1) return ma::add_mod(a, b, p_);
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::neg(Elem a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    Elem d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::sub(Elem a, Elem b) const {
  if (e_ == 1) return ma::sub_mod(a, b, p_);
  return add(a, neg(b));
}

Elem Field::mul(Elem a, Elem b) const {
  if (!mul_table_.empty()) return mul_table_[a * q_ + b];
  if (e_ == 1) return ma::mul_mod(a, b, p_);
  return mul_slow(a, b);
}

Elem Field::mul_slow(Elem a, Elem b) const {
  if (e_ == 1) return ma::mul_mod(a, b, p_);
  Digits da{}, db{};
  for (unsigned i = 0; i < e_; ++i) {
    da[i] = a % p_;
    db[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  std::array<std::uint64_t, 128> prod{};
  for (unsigned i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < e_; ++j) {
      prod[i + j] = ma::add_mod(prod[i + j], ma::mul_mod(da[i], db[j], p_), p_);
    }
  }
  for (unsigned i = 2 * e_ - 2; i >= e_; --i) {
    std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < e_; ++j) {
      prod[i - e_ + j] = ma::sub_mod(prod[i - e_ + j], ma::mul_mod(c, modulus_[j], p_), p_);
    }
  }
  Elem out = 0;
  for (unsigned i = e_; i-- > 0;) out = out * p_ + prod[i];
  return out;
}

Elem Field::inv(Elem a) const {
  if (a == 0) fail(Errc::domain, "inverse of zero");
  if (!inv_table_.empty()) return inv_table_[a];
  return inv_slow(a);
}

Elem Field::inv_slow(Elem a) const {
  if (e_ == 1) return *ma::inv_mod(a, p_);
  return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t n) const {
  Elem result = 1;
  while (n) {
    if (n & 1) result = mul(result, a);
    a = mul(a, a);
    n >>= 1;
  }
  return result;
}

Elem Field::pow(Elem a, const BigInt& n) const {
  if (n < 0) fail(Errc::invalid_argument, "negative exponent");
  Elem result = 1;
  if (n == 0) return result;
  auto top = boost::multiprecision::msb(n);
  for (std::size_t i = top + 1; i-- > 0;) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(i))) result = mul(result, a);
  }
  return result;
}

Elem Field::pth_root(Elem a) const {
  // (a^{p^{e-1}})^p = a^q = a
  Elem r = a;
  for (unsigned i = 1; i < e_; ++i) r = pow(r, p_);
  return r;
}

bool Field::is_square(Elem a) const {
  if (a == 0 || p_ == 2) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

std::string Field::header() const {
  std::ostringstream os;
  os << "q=" << p_ << '^' << e_ << ";modulus=";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  return os.str();
}

// ---------------------------------------------------------------------------
// Fq

Fq::Fq(FieldPtr field, Elem code) : field_(std::move(field)), code_(code) {
  if (!field_) fail(Errc::invalid_argument, "null field");
  if (!field_->valid(code_)) fail(Errc::invalid_argument, "element code out of range");
}

namespace {
const FieldPtr& common_field(const Fq& a, const Fq& b) {
  if (a.field() != b.field() && !(*a.field() == *b.field())) fail(Errc::context_mismatch, "elements of different fields");
  return a.field();
}
}  // namespace

Fq Fq::inv() const { return Fq(field_, field_->inv(code_)); }
Fq Fq::operator-() const { return Fq(field_, field_->neg(code_)); }
Fq operator+(const Fq& a, const Fq& b) {
  const auto& f = common_field(a, b);
  return Fq(f, f->add(a.code(), b.code()));
}
Fq operator-(const Fq& a, const Fq& b) {
  const auto& f = common_field(a, b);
  return Fq(f, f->sub(a.code(), b.code()));
}
Fq operator*(const Fq& a, const Fq& b) {
  const auto& f = common_field(a, b);
  return Fq(f, f->mul(a.code(), b.code()));
}
Fq operator/(const Fq& a, const Fq& b) {
  const auto& f = common_field(a, b);
  return Fq(f, f->div(a.code(), b.code()));
}
bool operator==(const Fq& a, const Fq& b) {
  common_field(a, b);
  return a.code() == b.code();
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) fail(Errc::invalid_argument, "null field");
}

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) fail(Errc::invalid_argument, "null field");
  for (auto c : c_) {
    if (!field_->valid(c)) fail(Errc::invalid_argument, "coefficient code out of range");
  }
  trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }
Poly Poly::x(FieldPtr field) { return Poly(std::move(field), {0, 1}); }
Poly Poly::monomial(FieldPtr field, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}
Poly Poly::linear(FieldPtr field, Elem a) {
  Elem na = field->neg(a);
  return Poly(std::move(field), {na, 1});
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& other) const {
  if (field_ != other.field_ && !(*field_ == *other.field_)) fail(Errc::context_mismatch, "polynomials over different fields");
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_->inv(lead()));
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], c);
  return Poly(field_, std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Elem> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i % field_->characteristic())));
  }
  return Poly(field_, std::move(v));
}

Elem Poly::eval(Elem x) const {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  a.check_same(b);
  const auto& f = *a.field_;
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a[i], b[i]);
  return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  a.check_same(b);
  const auto& f = *a.field_;
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a[i], b[i]);
  return Poly(a.field_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const auto& f = *a.field_;
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return Poly(a.field_, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  a.check_same(b);
  if (b.is_zero()) fail(Errc::domain, "polynomial division by zero");
  const auto& f = *a.field_;
  if (a.degree() < b.degree()) return {Poly(a.field_), a};
  std::vector<Elem> rem = a.c_;
  std::vector<Elem> quot(a.c_.size() - b.c_.size() + 1, 0);
  Elem inv_lead = f.inv(b.lead());
  std::size_t db = b.c_.size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    Elem c = rem[i];
    if (c == 0) continue;
    c = f.mul(c, inv_lead);
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.c_[j]));
  }
  return {Poly(a.field_, std::move(quot)), Poly(a.field_, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return Poly::divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return Poly::divmod(a, b).second; }

bool operator==(const Poly& a, const Poly& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus) { return (a * b) % modulus; }

Poly powmod(const Poly& base, const BigInt& exponent, const Poly& modulus) {
  Poly result = Poly::constant(base.field(), 1) % modulus;
  if (exponent == 0) return result;
  Poly b = base % modulus;
  auto top = boost::multiprecision::msb(exponent);
  for (std::size_t i = top + 1; i-- > 0;) {
    result = mulmod(result, result, modulus);
    if (boost::multiprecision::bit_test(exponent, static_cast<unsigned>(i))) result = mulmod(result, b, modulus);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Factorization

namespace {

Poly pth_root_poly(const Poly& c) {
  const auto& f = *c.field();
  std::uint64_t p = f.characteristic();
  std::vector<Elem> v;
  for (std::size_t i = 0; i < c.coeffs().size(); i += p) v.push_back(f.pth_root(c.coeffs()[i]));
  return Poly(c.field(), std::move(v));
}

void squarefree(const Poly& f, unsigned mult, std::vector<Factor>& out) {
  if (f.degree() <= 0) return;
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * mult});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    auto p = static_cast<unsigned>(f.field()->characteristic());
    squarefree(pth_root_poly(c.monic()), mult * p, out);
  }
}

// Returns (product of all irreducible factors of degree d, d) pairs.
std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, unsigned>> out;
  const BigInt q = f.field()->order();
  Poly x = Poly::x(f.field());
  Poly h = x % f;
  unsigned d = 1;
  while (f.degree() >= 2 * static_cast<int>(d)) {
    h = powmod(h, q, f);
    Poly g = gcd(h - x, f);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
    ++d;
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
  return out;
}

Poly random_poly_below(const FieldPtr& field, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> dist(0, field->order() - 1);
  std::vector<Elem> v(static_cast<std::size_t>(degree));
  for (auto& c : v) c = dist(rng);
  return Poly(field, std::move(v));
}

void equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f.monic());
    return;
  }
  const auto& field = f.field();
  const std::uint64_t q = field->order();
  const bool even = field->characteristic() == 2;
  BigInt qd = 1;
  for (unsigned i = 0; i < d; ++i) qd *= q;
  const BigInt half = (qd - 1) / 2;
  const unsigned trace_len = field->degree() * d;
  while (true) {
    Poly a = random_poly_below(field, f.degree(), rng);
    if (a.degree() <= 0) continue;
    Poly b(field);
    if (even) {
      Poly cur = a % f;
      b = cur;
      for (unsigned i = 1; i < trace_len; ++i) {
        cur = mulmod(cur, cur, f);
        b = b + cur;
      }
    } else {
      b = powmod(a, half, f) - Poly::constant(field, 1);
    }
    Poly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factor(const Poly& p, std::uint64_t seed) {
  if (p.is_zero()) fail(Errc::domain, "cannot factor the zero polynomial");
  Factorization result{p.lead(), {}};
  if (p.degree() == 0) return result;
  std::vector<Factor> sqf;
  squarefree(p.monic(), 1, sqf);
  std::mt19937_64 rng(seed);
  std::map<Poly, unsigned> acc;
  for (const auto& [g, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(g)) {
      std::vector<Poly> irr;
      equal_degree(block, d, rng, irr);
      for (auto& q : irr) acc[q] += mult;
    }
  }
  for (auto& [poly, mult] : acc) result.factors.push_back({poly, mult});
  return result;
}

bool is_separable(const Poly& p) {
  if (p.is_zero()) fail(Errc::domain, "separability of the zero polynomial");
  return gcd(p, p.derivative()).degree() == 0;
}

bool is_irreducible(const Poly& p) {
  if (p.degree() <= 0) return false;
  if (p.degree() == 1) return true;
  Poly f = p.monic();
  const auto n = static_cast<std::uint64_t>(f.degree());
  const BigInt q = f.field()->order();
  Poly x = Poly::x(f.field());
  // frob[k] = X^{q^k} mod f
  std::vector<Poly> frob{x % f};
  for (std::uint64_t k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), q, f));
  if (!(frob[n] == x % f)) return false;
  for (const auto& [r, _] : modarith::factorize(n)) {
    if (!gcd(frob[n / r] - x, f).is_one()) return false;
  }
  return true;
}

Poly lambda_reciprocal(const Poly& p, Elem lambda0) {
  const auto& f = *p.field();
  if (!p.is_monic()) fail(Errc::invalid_argument, "lambda_reciprocal expects a monic polynomial");
  if (lambda0 == 0) fail(Errc::domain, "lambda0 must be nonzero");
  const Elem a0 = p[0];
  if (a0 == 0) fail(Errc::domain, "lambda_reciprocal needs a nonzero constant term");
  const std::size_t r = static_cast<std::size_t>(p.degree());
  const Elem inv_a0 = f.inv(a0);
  std::vector<Elem> v(r + 1, 0);
  Elem lam_pow = 1;
  for (std::size_t i = 0; i <= r; ++i) {
    v[r - i] = f.mul(f.mul(p[i], lam_pow), inv_a0);
    lam_pow = f.mul(lam_pow, lambda0);
  }
  return Poly(p.field(), std::move(v));
}

namespace {
int mobius(std::uint64_t n) {
  int mu = 1;
  for (const auto& [prime, e] : modarith::factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}
}  // namespace

BigInt count_irreducibles(std::uint64_t q, unsigned d) {
  if (d < 1) fail(Errc::invalid_argument, "degree must be >= 1");
  if (!modarith::prime_power(q)) fail(Errc::invalid_argument, std::to_string(q) + " is not a prime power");
  BigInt sum = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e) continue;
    int mu = mobius(d / e);
    if (mu == 0) continue;
    BigInt qe = boost::multiprecision::pow(BigInt(q), e);
    sum += mu > 0 ? qe : BigInt(-qe);
  }
  return sum / d;
}

std::vector<Poly> monic_irreducibles(const FieldPtr& field, unsigned d) {
  if (d < 1) fail(Errc::invalid_argument, "degree must be >= 1");
  const std::uint64_t q = field->order();
  long double total = 1;
  for (unsigned i = 0; i < d; ++i) total *= static_cast<long double>(q);
  if (total > 1e7L) fail(Errc::infeasible, "too many monic polynomials to enumerate");
  std::vector<Poly> out;
  std::vector<Elem> c(d + 1, 0);
  c[d] = 1;
  while (true) {
    Poly cand(field, c);
    if (is_irreducible(cand)) out.push_back(cand);
    unsigned i = 0;
    while (i < d && ++c[i] == q) c[i++] = 0;
    if (i == d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poly random_irreducible(const FieldPtr& field, unsigned d, std::uint64_t seed) {
  if (d < 1) fail(Errc::invalid_argument, "degree must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> dist(0, field->order() - 1);
  while (true) {
    std::vector<Elem> c(d + 1);
    for (unsigned i = 0; i < d; ++i) c[i] = dist(rng);
    c[d] = 1;
    Poly cand(field, std::move(c));
    if (is_irreducible(cand)) return cand;
  }
}

std::string serialize(const Poly& p) {
  std::ostringstream os;
  os << p.field()->header() << ";coeffs=";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? "," : "") << p.coeffs()[i];
  return os.str();
}

namespace {
std::vector<std::uint64_t> parse_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      fail(Errc::invalid_argument, "bad integer '" + item + "' in coefficient list");
    }
  }
  return out;
}
}  // namespace

Poly parse_poly(const std::string& text) {
  std::map<std::string, std::string> fields;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) fail(Errc::invalid_argument, "malformed polynomial record: " + text);
    fields[part.substr(0, eq)] = part.substr(eq + 1);
  }
  if (!fields.count("q") || !fields.count("modulus") || !fields.count("coeffs")) {
    fail(Errc::invalid_argument, "polynomial record needs q, modulus and coeffs: " + text);
  }
  const auto& qs = fields["q"];
  auto caret = qs.find('^');
  if (caret == std::string::npos) fail(Errc::invalid_argument, "q must be written <p>^<e>");
  std::uint64_t p = parse_list(qs.substr(0, caret)).at(0);
  std::uint64_t e = parse_list(qs.substr(caret + 1)).at(0);
  auto modulus = parse_list(fields["modulus"]);
  if (modulus.size() != e + 1) fail(Errc::invalid_argument, "modulus degree does not match q");
  auto field = Field::make(p, std::move(modulus));
  return Poly(field, parse_list(fields["coeffs"]));
}

}  // namespace elkies::ff

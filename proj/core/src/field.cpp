#include "uhg/field.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <sstream>

#include "scalar_ops.hpp"

namespace uhg {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMaxModulus = (u64{1} << 62);

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  // extended Euclid; p prime, a != 0 (mod p)
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<u64>(t);
}

bool miller_rabin(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Tonelli-Shanks square root modulo an odd prime; `a` must be a QR.
u64 sqrtmod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) q >>= 1, ++s;
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = s;
  u64 c = powmod(z, q, p);
  u64 t = powmod(a, q, p);
  u64 r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 t2 = t;
    u64 i = 0;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    u64 b = powmod(c, u64{1} << (m - i - 1), p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

const mpq_class& as_q(const Scalar::Payload& v) { return std::get<mpq_class>(v); }
u64 as_p(const Scalar::Payload& v) { return std::get<u64>(v); }

[[noreturn]] void mixed() { throw error(errc::mixed_fields, "scalars belong to different fields"); }

}  // namespace

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::operator+(const Scalar& o) const {
  if (f_ != o.f_) mixed();
  switch (f_->kind()) {
    case Field::Kind::rationals:
      return Scalar(f_, mpq_class(as_q(v_) + as_q(o.v_)));
    case Field::Kind::prime: {
      u64 p = f_->p_;
      u64 s = as_p(v_) + as_p(o.v_);
      if (s >= p) s -= p;
      return Scalar(f_, s);
    }
    case Field::Kind::extension: {
      const auto& a = ScalarOps::ext(*this);
      const auto& b = ScalarOps::ext(o);
      return ScalarOps::make_ext(f_, a.a + b.a, a.b + b.b);
    }
  }
  __builtin_unreachable();
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  switch (f_->kind()) {
    case Field::Kind::rationals:
      return Scalar(f_, mpq_class(-as_q(v_)));
    case Field::Kind::prime: {
      u64 v = as_p(v_);
      return Scalar(f_, v == 0 ? 0 : f_->p_ - v);
    }
    case Field::Kind::extension: {
      const auto& e = ScalarOps::ext(*this);
      return ScalarOps::make_ext(f_, -e.a, -e.b);
    }
  }
  __builtin_unreachable();
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (f_ != o.f_) mixed();
  switch (f_->kind()) {
    case Field::Kind::rationals:
      return Scalar(f_, mpq_class(as_q(v_) * as_q(o.v_)));
    case Field::Kind::prime:
      return Scalar(f_, mulmod(as_p(v_), as_p(o.v_), f_->p_));
    case Field::Kind::extension: {
      // (a1 + b1 r)(a2 + b2 r) = a1 a2 + d b1 b2 + (a1 b2 + a2 b1) r
      const auto& x = ScalarOps::ext(*this);
      const auto& y = ScalarOps::ext(o);
      const Scalar& d = *f_->d_;
      return ScalarOps::make_ext(f_, x.a * y.a + d * (x.b * y.b), x.a * y.b + x.b * y.a);
    }
  }
  __builtin_unreachable();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw error(errc::division_by_zero, "inverse of zero");
  switch (f_->kind()) {
    case Field::Kind::rationals:
      return Scalar(f_, mpq_class(1 / as_q(v_)));
    case Field::Kind::prime:
      return Scalar(f_, invmod(as_p(v_), f_->p_));
    case Field::Kind::extension: {
      // 1/(a + b r) = (a - b r)/(a^2 - d b^2); the norm is nonzero since d is
      // a non-square in the base.
      const auto& e = ScalarOps::ext(*this);
      const Scalar& d = *f_->d_;
      Scalar norm = e.a * e.a - d * (e.b * e.b);
      Scalar ni = norm.inverse();
      return ScalarOps::make_ext(f_, e.a * ni, -(e.b * ni));
    }
  }
  __builtin_unreachable();
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (f_ != o.f_) mixed();
  switch (f_->kind()) {
    case Field::Kind::rationals:
      return as_q(v_) == as_q(o.v_);
    case Field::Kind::prime:
      return as_p(v_) == as_p(o.v_);
    case Field::Kind::extension: {
      const auto& a = ScalarOps::ext(*this);
      const auto& b = ScalarOps::ext(o);
      return a.a == b.a && a.b == b.b;
    }
  }
  __builtin_unreachable();
}

bool Scalar::is_zero() const {
  switch (f_->kind()) {
    case Field::Kind::rationals:
      return sgn(as_q(v_)) == 0;
    case Field::Kind::prime:
      return as_p(v_) == 0;
    case Field::Kind::extension: {
      const auto& e = ScalarOps::ext(*this);
      return e.a.is_zero() && e.b.is_zero();
    }
  }
  __builtin_unreachable();
}

bool Scalar::is_one() const { return *this == one(); }

Scalar Scalar::zero() const { return f_->zero(); }
Scalar Scalar::one() const { return f_->one(); }

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  if (a.f_ != b.f_) mixed();
  switch (a.f_->kind()) {
    case Field::Kind::rationals:
      return ::cmp(as_q(a.v_), as_q(b.v_));
    case Field::Kind::prime: {
      u64 x = as_p(a.v_), y = as_p(b.v_);
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    case Field::Kind::extension: {
      const auto& x = ScalarOps::ext(a);
      const auto& y = ScalarOps::ext(b);
      int c = cmp(x.a, y.a);
      return c != 0 ? c : cmp(x.b, y.b);
    }
  }
  __builtin_unreachable();
}

int Scalar::lead_sign() const {
  switch (f_->kind()) {
    case Field::Kind::rationals:
      return sgn(as_q(v_));
    case Field::Kind::prime: {
      u64 v = as_p(v_);
      if (v == 0) return 0;
      return v <= (f_->p_ - 1) / 2 ? 1 : -1;
    }
    case Field::Kind::extension: {
      const auto& e = ScalarOps::ext(*this);
      int s = e.a.lead_sign();
      return s != 0 ? s : e.b.lead_sign();
    }
  }
  __builtin_unreachable();
}

// ---------------------------------------------------------------------------
// Field construction

namespace {
std::mutex g_field_mutex;
}

FieldHandle Field::rationals() {
  static FieldHandle q = [] {
    auto f = std::make_shared<Field>(Private{});
    f->kind_ = Kind::rationals;
    f->char_ = 0;
    return f;
  }();
  return q;
}

FieldHandle Field::prime(std::uint64_t p) {
  if (p == 2) throw error(errc::characteristic_two, "characteristic two is excluded");
  if (p >= kMaxModulus) throw error(errc::modulus_too_large, "prime modulus exceeds 2^62");
  if (!miller_rabin(p)) throw error(errc::not_prime, "modulus " + std::to_string(p) + " is not prime");
  std::lock_guard<std::mutex> lock(g_field_mutex);
  static std::map<u64, FieldHandle> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<Field>(Private{});
  f->kind_ = Kind::prime;
  f->p_ = p;
  f->char_ = p;
  cache.emplace(p, f);
  return f;
}

FieldHandle Field::extension(const FieldHandle& base, const Scalar& d, int max_depth) {
  if (&d.field() != base.get()) mixed();
  if (base->depth_ + 1 > max_depth)
    throw error(errc::tower_too_deep, "extension tower exceeds depth " + std::to_string(max_depth));
  if (base->is_square(d))
    throw error(errc::redundant_extension, "radicand is already a square in the base field");
  auto f = std::make_shared<Field>(Private{});
  f->kind_ = Kind::extension;
  f->char_ = base->char_;
  f->depth_ = base->depth_ + 1;
  f->base_ = base;
  f->d_ = d;
  return f;
}

FieldHandle Field::make(const FieldSpec& spec, int max_depth) {
  switch (spec.kind) {
    case FieldSpec::Kind::rationals:
      return rationals();
    case FieldSpec::Kind::prime:
      return prime(spec.p);
    case FieldSpec::Kind::extension: {
      FieldHandle b = make(*spec.base, max_depth);
      return extension(b, b->from_int(spec.d), max_depth);
    }
  }
  __builtin_unreachable();
}

const FieldHandle& Field::base() const {
  assert(kind_ == Kind::extension);
  return base_;
}

const Scalar& Field::radicand() const {
  assert(kind_ == Kind::extension);
  return *d_;
}

std::uint64_t Field::order() const {
  assert(kind_ == Kind::prime);
  return p_;
}

Scalar Field::element(std::uint64_t index) const {
  assert(kind_ == Kind::prime);
  return ScalarOps::make(this, Scalar::Payload(u64(index % p_)));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
  switch (kind_) {
    case Kind::rationals:
      return ScalarOps::make(this, mpq_class(static_cast<long>(n)));
    case Kind::prime: {
      long long m = n % static_cast<long long>(p_);
      if (m < 0) m += static_cast<long long>(p_);
      return ScalarOps::make(this, Scalar::Payload(u64(m)));
    }
    case Kind::extension:
      return ScalarOps::make_ext(this, base_->from_int(n), base_->zero());
  }
  __builtin_unreachable();
}

Scalar Field::from_mpz(const mpz_class& n) const {
  switch (kind_) {
    case Kind::rationals:
      return ScalarOps::make(this, mpq_class(n));
    case Kind::prime: {
      mpz_class m = n % mpz_class(static_cast<unsigned long>(p_));
      if (m < 0) m += mpz_class(static_cast<unsigned long>(p_));
      return ScalarOps::make(this, Scalar::Payload(u64(m.get_ui())));
    }
    case Kind::extension:
      return ScalarOps::make_ext(this, base_->from_mpz(n), base_->zero());
  }
  __builtin_unreachable();
}

Scalar Field::from_mpq(const mpq_class& q) const {
  switch (kind_) {
    case Kind::rationals: {
      mpq_class c = q;
      c.canonicalize();
      return ScalarOps::make(this, std::move(c));
    }
    case Kind::prime:
    case Kind::extension: {
      Scalar num = from_mpz(mpz_class(q.get_num()));
      Scalar den = from_mpz(mpz_class(q.get_den()));
      return num / den;
    }
  }
  __builtin_unreachable();
}

Scalar Field::make_ext(const Scalar& a, const Scalar& b) const {
  assert(kind_ == Kind::extension);
  if (&a.field() != base_.get() || &b.field() != base_.get()) mixed();
  return ScalarOps::make_ext(this, a, b);
}

// ---------------------------------------------------------------------------
// Squares

bool Field::is_square(const Scalar& x) const { return sqrt(x).has_value(); }

std::optional<Scalar> Field::sqrt(const Scalar& x) const {
  if (&x.field() != this) mixed();
  if (x.is_zero()) return zero();
  switch (kind_) {
    case Kind::rationals: {
      const mpq_class& q = std::get<mpq_class>(ScalarOps::payload(x));
      if (sgn(q) < 0) return std::nullopt;
      const mpz_class num = q.get_num(), den = q.get_den();
      if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      mpq_class r(rn, rd);
      r.canonicalize();
      return ScalarOps::make(this, std::move(r));
    }
    case Kind::prime: {
      u64 v = std::get<u64>(ScalarOps::payload(x));
      if (powmod(v, (p_ - 1) / 2, p_) != 1) return std::nullopt;
      u64 r = sqrtmod(v, p_);
      if (r > (p_ - 1) / 2) r = p_ - r;
      return ScalarOps::make(this, Scalar::Payload(r));
    }
    case Kind::extension: {
      const auto& e = ScalarOps::ext(x);
      const Scalar& d = *d_;
      std::optional<Scalar> root;
      if (e.b.is_zero()) {
        // (y r)^2 = d y^2, so try both a square in the base and a/d a square.
        if (auto ra = base_->sqrt(e.a)) {
          root = make_ext(*ra, base_->zero());
        } else if (auto rb = base_->sqrt(e.a / d)) {
          root = make_ext(base_->zero(), *rb);
        }
      } else {
        // (x + y r)^2 = x^2 + d y^2 + 2xy r: need the norm a^2 - d b^2 to be
        // a base square, then x^2 = (a ± n)/2.
        Scalar norm = e.a * e.a - d * (e.b * e.b);
        if (auto n = base_->sqrt(norm)) {
          Scalar two = base_->from_int(2);
          for (const Scalar& cand : {(e.a + *n) / two, (e.a - *n) / two}) {
            if (auto rx = base_->sqrt(cand)) {
              if (!rx->is_zero()) {
                Scalar y = e.b / (two * *rx);
                root = make_ext(*rx, y);
                break;
              }
            }
          }
        }
      }
      if (!root) return std::nullopt;
      if (root->lead_sign() < 0) *root = -*root;
      assert(root->square() == x);
      return root;
    }
  }
  __builtin_unreachable();
}

// ---------------------------------------------------------------------------
// Sampling

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  // Rejection to kill modulo bias; fixed algorithm for reproducibility.
  if (n == 0) return 0;
  u64 limit = UINT64_MAX - UINT64_MAX % n;
  u64 r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

Scalar Field::sample(unsigned bound, std::mt19937_64& rng) const {
  if (bound == 0) bound = 1;
  switch (kind_) {
    case Kind::rationals: {
      long long num = static_cast<long long>(uniform_below(rng, 2 * u64(bound) + 1)) - bound;
      long long den = static_cast<long long>(uniform_below(rng, bound)) + 1;
      mpq_class q(static_cast<long>(num), static_cast<long>(den));
      q.canonicalize();
      return ScalarOps::make(this, std::move(q));
    }
    case Kind::prime:
      return element(uniform_below(rng, p_));
    case Kind::extension: {
      Scalar a = base_->sample(bound, rng);
      Scalar b = base_->sample(bound, rng);
      return make_ext(a, b);
    }
  }
  __builtin_unreachable();
}

// ---------------------------------------------------------------------------
// Spec handling

FieldSpec FieldSpec::rationals() { return FieldSpec{}; }

FieldSpec FieldSpec::prime(std::uint64_t p) {
  FieldSpec s;
  s.kind = Kind::prime;
  s.p = p;
  return s;
}

FieldSpec FieldSpec::extension(FieldSpec base, long long d) {
  FieldSpec s;
  s.kind = Kind::extension;
  s.base = std::make_shared<FieldSpec>(std::move(base));
  s.d = d;
  return s;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  auto fail = [&](const std::string& tok) -> FieldSpec {
    throw error(errc::parse_error, "bad field spec near '" + tok + "'");
  };
  std::string s(text);
  // strip whitespace
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;

  FieldSpec base;
  size_t pos = 0;
  if (t.compare(0, 1, "Q") == 0) {
    base = rationals();
    pos = 1;
  } else if (t.compare(0, 3, "Fp=") == 0) {
    size_t end = t.find('[', 3);
    std::string digits = t.substr(3, end == std::string::npos ? std::string::npos : end - 3);
    if (digits.empty()) return fail(t.substr(0, 3));
    u64 p = 0;
    for (char c : digits) {
      if (!isdigit(static_cast<unsigned char>(c))) return fail(digits);
      p = p * 10 + (c - '0');
      if (p >= kMaxModulus) throw error(errc::modulus_too_large, "prime modulus exceeds 2^62");
    }
    base = prime(p);
    pos = (end == std::string::npos) ? t.size() : end;
  } else {
    return fail(t.substr(0, 2));
  }

  if (pos == t.size()) return base;
  if (t.compare(pos, 6, "[sqrt=") != 0 || t.back() != ']') return fail(t.substr(pos));
  std::string inner = t.substr(pos + 6, t.size() - pos - 7);
  if (inner.empty()) return fail("[sqrt=]");
  FieldSpec cur = base;
  size_t start = 0;
  while (start <= inner.size()) {
    size_t comma = inner.find(',', start);
    std::string item = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty() || item == "-") return fail(item);
    try {
      size_t used = 0;
      long long d = std::stoll(item, &used);
      if (used != item.size()) return fail(item);
      cur = extension(std::move(cur), d);
    } catch (const std::exception&) {
      return fail(item);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cur;
}

std::string FieldSpec::str() const {
  switch (kind) {
    case Kind::rationals:
      return "Q";
    case Kind::prime:
      return "Fp=" + std::to_string(p);
    case Kind::extension: {
      // collapse the tower into base[sqrt=a,b,...]
      std::vector<long long> ds;
      const FieldSpec* cur = this;
      while (cur->kind == Kind::extension) {
        ds.push_back(cur->d);
        cur = cur->base.get();
      }
      std::string out = cur->kind == Kind::rationals ? "Q" : "Fp=" + std::to_string(cur->p);
      out += "[sqrt=";
      for (size_t i = ds.size(); i-- > 0;) {
        out += std::to_string(ds[i]);
        if (i) out += ",";
      }
      out += "]";
      return out;
    }
  }
  __builtin_unreachable();
}

std::string Field::str() const {
  switch (kind_) {
    case Kind::rationals:
      return "Q";
    case Kind::prime:
      return "Fp=" + std::to_string(p_);
    case Kind::extension: {
      std::vector<const Field*> chain;
      const Field* cur = this;
      while (cur->kind_ == Kind::extension) {
        chain.push_back(cur);
        cur = cur->base_.get();
      }
      std::string out = cur->str();
      out += "[sqrt=";
      for (size_t i = chain.size(); i-- > 0;) {
        // radicands in towers built from specs are integer lifts; print the
        // leading integer when possible, otherwise a placeholder.
        extern std::string scalar_literal(const Scalar&);
        out += scalar_literal(chain[i]->radicand());
        if (i) out += ",";
      }
      out += "]";
      return out;
    }
  }
  __builtin_unreachable();
}

}  // namespace uhg

#include "hwc/scalar.hpp"

#include <limits>

namespace hwc {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) { return static_cast<uint64_t>((u128)a * b % m); }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u128 gcd128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = neg ? (u128)(-(v + 1)) + 1 : (u128)v;
  mpz_class hi = static_cast<unsigned long>(u >> 64);
  mpz_class lo = static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL);
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

Field Field::prime(uint64_t p) {
  if (p >= (1ULL << 61)) throw std::invalid_argument("prime must be below 2^61");
  if (!is_prime_u64(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::name() const { return p_ ? "F_" + std::to_string(p_) : "Q"; }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  Scalar s;
  s.p_ = p_;
  if (p_) {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    s.n_ = r;
    return s;
  }
  if (v == std::numeric_limits<long long>::min()) return Scalar::from_big(mpq_class(mpz_class(static_cast<long>(v))));
  s.n_ = v;
  return s;
}

Scalar Field::from_mpq(const mpq_class& q) const {
  if (!p_) return Scalar::from_big(q);
  mpz_class m = static_cast<unsigned long>(p_);
  mpz_class n = q.get_num() % m, d = q.get_den() % m;
  if (n < 0) n += m;
  if (d == 0) throw std::domain_error("denominator divisible by the characteristic");
  Scalar a = from_int(0), b = from_int(0);
  a.n_ = static_cast<int64_t>(n.get_ui());
  b.n_ = static_cast<int64_t>(d.get_ui());
  return a / b;
}

Scalar Field::parse(const std::string& text) const {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad scalar '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return from_mpq(q);
}

Scalar Field::random(std::mt19937_64& rng, int range) const {
  std::uniform_int_distribution<int> dist(-range, range);
  return from_int(dist(rng));
}

Field Scalar::field() const { return p_ ? Field::prime(p_) : Field(); }

Scalar Scalar::make_rat(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(n < 0 ? (u128)(-n) : (u128)n, (u128)d);
  if (g > 1) {
    n /= (i128)g;
    d /= (i128)g;
  }
  if (fits(n) && fits(d)) {
    Scalar s;
    s.n_ = static_cast<int64_t>(n);
    s.d_ = static_cast<int64_t>(d);
    return s;
  }
  return from_big(mpq_class(to_mpz(n), to_mpz(d)));
}

Scalar Scalar::from_big(mpq_class q) {
  q.canonicalize();
  Scalar s;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    long n = q.get_num().get_si(), d = q.get_den().get_si();
    if (n != std::numeric_limits<long>::min()) {
      s.n_ = n;
      s.d_ = d;
      return s;
    }
  }
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
  q.canonicalize();
  return q;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  if (p_) {
    Scalar r = *this;
    uint64_t v = static_cast<uint64_t>(n_) + static_cast<uint64_t>(o.n_);
    if (v >= p_) v -= p_;
    r.n_ = static_cast<int64_t>(v);
    return r;
  }
  if (!big_ && !o.big_) {
    if (d_ == 1 && o.d_ == 1) return make_rat((i128)n_ + o.n_, 1);
    return make_rat((i128)n_ * o.d_ + (i128)o.n_ * d_, (i128)d_ * o.d_);
  }
  return from_big(to_mpq() + o.to_mpq());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_) {
    r.n_ = n_ ? static_cast<int64_t>(p_ - static_cast<uint64_t>(n_)) : 0;
    return r;
  }
  if (big_) return from_big(-*big_);
  r.n_ = -n_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  if (p_) {
    Scalar r = *this;
    uint64_t a = static_cast<uint64_t>(n_), b = static_cast<uint64_t>(o.n_);
    r.n_ = static_cast<int64_t>(a >= b ? a - b : a + p_ - b);
    return r;
  }
  if (!big_ && !o.big_) {
    if (d_ == 1 && o.d_ == 1) return make_rat((i128)n_ - o.n_, 1);
    return make_rat((i128)n_ * o.d_ - (i128)o.n_ * d_, (i128)d_ * o.d_);
  }
  return from_big(to_mpq() - o.to_mpq());
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  if (p_) {
    Scalar r = *this;
    r.n_ = static_cast<int64_t>(mulmod(static_cast<uint64_t>(n_), static_cast<uint64_t>(o.n_), p_));
    return r;
  }
  if (!big_ && !o.big_) return make_rat((i128)n_ * o.n_, (i128)d_ * o.d_);
  return from_big(to_mpq() * o.to_mpq());
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (p_) {
    Scalar r = *this;
    r.n_ = static_cast<int64_t>(powmod(static_cast<uint64_t>(n_), p_ - 2, p_));
    return r;
  }
  if (!big_) return make_rat(d_, n_);
  return from_big(1 / *big_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check(o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (p_) return *this * o.inv();
  if (!big_ && !o.big_) return make_rat((i128)n_ * o.d_, (i128)d_ * o.n_);
  return from_big(to_mpq() / o.to_mpq());
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  if (!big_ && !o.big_) return n_ == o.n_ && d_ == o.d_;
  if (big_ && o.big_) return *big_ == *o.big_;
  return false;  // canonical forms: big values never fit the small range
}

std::string Scalar::str() const {
  if (big_) return big_->get_str();
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

}  // namespace hwc

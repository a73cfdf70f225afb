#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hwc {

class Scalar;

struct FieldMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

bool is_prime_u64(uint64_t n);

// Q when p == 0, otherwise F_p.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(uint64_t p);

  bool is_rational() const { return p_ == 0; }
  uint64_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_mpq(const mpq_class& q) const;
  Scalar parse(const std::string& s) const;
  Scalar random(std::mt19937_64& rng, int range = 5) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(uint64_t p) : p_(p) {}
  uint64_t p_ = 0;
};

class Scalar {
 public:
  Scalar() = default;

  Field field() const;
  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  mpq_class to_mpq() const;
  // residue for F_p, numerator for integral rationals
  uint64_t residue() const { return static_cast<uint64_t>(n_); }
  bool is_small() const { return !big_; }
  std::string str() const;

 private:
  friend class Field;
  static Scalar make_rat(__int128 n, __int128 d);
  static Scalar from_big(mpq_class q);
  void check(const Scalar& o) const {
    if (p_ != o.p_) throw FieldMismatch("scalars from different fields");
  }

  uint64_t p_ = 0;
  int64_t n_ = 0, d_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace hwc

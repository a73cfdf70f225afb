#pragma once

#include <map>
#include <string>

namespace hwc {

// Integer Laurent polynomial in t, used for graded multiplicities.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int e, long long c = 1);

  long long coeff(int e) const;
  void add_term(int e, long long c);
  const std::map<int, long long>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long long at_one() const;
  LaurentPoly bar() const;
  LaurentPoly shifted(int k) const;
  int min_exp() const;
  int max_exp() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }
  std::string str() const;

 private:
  std::map<int, long long> c_;
};

}  // namespace hwc

#include "hwc/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace hwc {

LaurentPoly LaurentPoly::monomial(int e, long long c) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

long long LaurentPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int e, long long c) {
  if (!c) return;
  long long v = (c_[e] += c);
  if (!v) c_.erase(e);
}

long long LaurentPoly::at_one() const {
  long long s = 0;
  for (auto& [e, c] : c_) s += c;
  return s;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  for (auto& [e, c] : c_) p.c_[-e] = c;
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (auto& [e, c] : c_) p.c_[e + k] = c;
  return p;
}

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly p = *this;
  p += o;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly p = *this;
  for (auto& [e, c] : o.c_) p.add_term(e, -c);
  return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly p;
  for (auto& [e, c] : c_)
    for (auto& [f, d] : o.c_) p.add_term(e + f, c * d);
  return p;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : c_) {
    long long a = c < 0 ? -c : c;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace hwc

#pragma once

#include <random>
#include <vector>

#include "hwc/scalar.hpp"

namespace hwc {

// Univariate polynomials as coefficient vectors, lowest degree first.
using UPoly = std::vector<Scalar>;

void upoly_trim(UPoly& p);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
UPoly upoly_mod(const UPoly& a, const UPoly& m);
UPoly upoly_gcd(UPoly a, UPoly b);
Scalar upoly_eval(const UPoly& p, const Scalar& x);

// Distinct roots in the base field, sorted.
std::vector<Scalar> field_roots(const UPoly& p, std::mt19937_64& rng);

}  // namespace hwc

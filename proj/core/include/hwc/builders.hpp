#pragma once

#include <map>
#include <optional>
#include <string>

#include "hwc/algebra.hpp"

namespace hwc {

struct BuiltAlgebra {
  std::shared_ptr<Algebra> A;
  TriangularData tri;
  std::optional<Matrix> tau;   // columns τ(e_k)
  std::optional<Vec> trace;    // graded-symmetric form, when known
  std::string description;
  std::map<std::string, Vec> named;  // e.g. the Casimir "Omega"
};

// a·x = x·a for every basis element x
bool is_central(const Algebra& A, const Vec& a);

struct TruncVar {
  std::string name;
  int deg = 0;
  int exp = 2;
};

// K[x_1..x_m]/(x_i^{n_i}); negative variables span A⁻, positive ones A⁺, T = K
BuiltAlgebra truncated_polynomial(const Field& f, const std::vector<TruncVar>& vars);
// restricted enveloping algebra of sl2 over F_p, deg E = 1, deg F = -1
BuiltAlgebra restricted_sl2(uint64_t p, bool force = false);
// Mat_n(K) in degree 0 with T = A
BuiltAlgebra matrix_algebra(const Field& f, int n);

std::vector<TruncVar> parse_trunc_vars(const std::string& text);
// "trunc:x:-1:2,y:1:2", "sl2:3", "mat:2"
BuiltAlgebra build_family(const std::string& family, const Field& f, bool force = false);

}  // namespace hwc

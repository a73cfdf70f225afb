#pragma once

#include <algorithm>
#include <random>

#include "hwc/builders.hpp"
#include "hwc/cover.hpp"
#include "hwc/datum.hpp"
#include "hwc/matrices.hpp"

namespace hwc::testing {

inline Workspace workspace(const std::string& family, const Field& f = Field::rationals(), uint64_t seed = 0) {
  auto B = build_family(family, f);
  return Workspace(B.A, B.tri, seed);
}

inline int count_deg(const std::vector<int>& degs, int d) { return static_cast<int>(std::count(degs.begin(), degs.end(), d)); }

// K[x,y,(z)]/(x^a, ...) with random signs, degrees and exponents
inline std::string random_trunc_family(std::mt19937_64& rng) {
  static const char* names[] = {"x", "y", "z"};
  std::uniform_int_distribution<int> nv(2, 3), sign(0, 1), mag(1, 2), ex(2, 3);
  int n = nv(rng);
  std::string s = "trunc:";
  for (int i = 0; i < n; ++i) {
    int deg = (sign(rng) ? 1 : -1) * (mag(rng) == 2 && n == 2 ? 2 : 1);
    int e = n == 3 ? 2 : ex(rng);
    s += (i ? "," : "") + std::string(names[i]) + ":" + std::to_string(deg) + ":" + std::to_string(e);
  }
  return s;
}

// dim e_v C_d, the number of basis elements starting at v
inline int projective_dim(const Truncation& T, int v) {
  int n = 0;
  for (int x = 0; x < T.C.dim(); ++x) n += T.C.alg->tgt[x] == v;
  return n;
}

// vertex whose C_d-projective has the given dimension (dimensions must be distinct)
inline std::vector<int> match_by_dims(const Truncation& T, const std::vector<int>& golden_dims) {
  std::vector<int> map;
  for (int g : golden_dims) {
    int hit = -1;
    for (int v = 0; v < T.C.nvert(); ++v)
      if (projective_dim(T, v) == g) hit = hit < 0 ? v : -2;
    map.push_back(hit);
  }
  return map;
}

inline Module random_quotient(const Workspace& W, std::mt19937_64& rng) {
  Module R = W.regular();
  std::uniform_int_distribution<int> pd(0, R.npieces() - 1), ng(1, 3);
  std::vector<std::pair<int, Vec>> seeds;
  int k = ng(rng);
  for (int i = 0; i < k; ++i) {
    int p = pd(rng);
    Vec v;
    for (int j = 0; j < R.piece_dim(p); ++j) v.push_back(R.field().random(rng, 2));
    seeds.push_back({p, v});
  }
  return quotient(R, spin(R, seeds, W.gens));
}

}  // namespace hwc::testing

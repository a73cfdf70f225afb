#pragma once

#include "hwc/basic.hpp"

namespace hwc {

// Minimal projective resolution P_n → ... → P_0 → X over a basic algebra.
// gens[i] lists the vertex of each indecomposable summand C e_v of P_i;
// diff[i][g][j] (i ≥ 1) is the element of e_{v_g} C e_{v_j} by which generator g
// of P_i maps into summand j of P_{i-1}.
struct Resolution {
  std::vector<std::vector<int>> gens;
  std::vector<std::vector<std::vector<Vec>>> diff;
  bool complete = false;  // final syzygy was zero
  int length() const { return static_cast<int>(gens.size()) - 1; }
};

Resolution minimal_resolution(const BasicAlgebra& C, const Module& X, int max_len);
// dims of Ext^i(X, Y) for i = 0..max_i using a resolution of length ≥ max_i + 1
std::vector<int> ext_dims(const BasicAlgebra& C, const Resolution& R, const Module& Y, int max_i);
std::vector<int> ext_dims(const BasicAlgebra& C, const Module& X, const Module& Y, int max_i);
// projective dimension, -1 when larger than max_len
int projective_dimension(const BasicAlgebra& C, const Module& X, int max_len);

}  // namespace hwc

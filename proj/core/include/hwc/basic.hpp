#pragma once

#include <string>

#include "hwc/graded.hpp"

namespace hwc {

// Basic algebra: basis element k lies in e_{tgt[k]} C e_{src[k]}; each vertex v has
// an idempotent basis element idem[v], all other basis elements span the radical.
struct BasicAlgebra {
  std::shared_ptr<Algebra> alg;
  std::vector<std::string> names;
  std::vector<int> idem;
  std::vector<int> rad;
  int nvert() const { return static_cast<int>(idem.size()); }
  int dim() const { return alg->dim(); }
  const Field& field() const { return alg->field(); }
  std::vector<Vec> rad_vectors() const;
  std::vector<int> all_indices() const;
};

// C e_v with pieces keyed by vertex; basis of piece w = basis elements in e_w C e_v
Module basic_projective(const BasicAlgebra& C, int v);
Module basic_simple(const BasicAlgebra& C, int v);
// idempotents plus radical basis elements independent modulo rad²
std::vector<int> basic_generators(const BasicAlgebra& C);
Subspace rad_power(const BasicAlgebra& C, int k);
int loewy_length(const BasicAlgebra& C);
// structural checks: idempotents orthogonal and complete, radical nilpotent
Check check_basic(const BasicAlgebra& C);

// flatten a morphism's blocks into one coordinate vector
Vec flatten(const Morphism& f);

}  // namespace hwc

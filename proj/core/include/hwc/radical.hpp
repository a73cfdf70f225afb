#pragma once

#include <random>

#include "hwc/hom.hpp"

namespace hwc {

// regular left module over an ungraded or single-component algebra
Module regular_module(AlgPtr B);
bool is_absolutely_simple(const Module& S);

struct SimpleDecomposition {
  std::vector<Module> simples;  // pairwise non-isomorphic, absolutely simple
  std::vector<int> mult;
};
// split semisimple single-piece module into simples; throws PreconditionError when no split is found
SimpleDecomposition decompose_semisimple(const Module& M, const std::vector<int>& gens, std::mt19937_64& rng);

// Dickson trace-form radical; needs characteristic 0 or p > dim
Subspace jacobson_radical(const Algebra& B);
Subspace annihilator(const Algebra& B, const std::vector<Module>& mods);
// simples of B from the semisimple quotient B/rad
std::vector<Module> simple_modules(AlgPtr B, const Subspace& rad, std::mt19937_64& rng);

Check check_split_semisimple(AlgPtr T);
// z_i acts as the identity on simples[i] and as zero on the others
std::vector<Vec> central_idempotents(const Algebra& B, const std::vector<Module>& simples);

struct IdempotentLift {
  std::vector<Vec> idem;       // complete orthogonal primitive idempotents
  std::vector<int> simple_of;  // index of the simple each one projects to
};
IdempotentLift lift_idempotents(const Algebra& B, const std::vector<Module>& simples);

struct BlockInfo {
  std::vector<int> members;  // indices into the idempotent list
  Vec central;
  int dim = 0;
};
std::vector<BlockInfo> block_decomposition(const Algebra& B, const std::vector<Vec>& idem);

}  // namespace hwc

#pragma once

#include "hwc/graded.hpp"

namespace hwc {

// Rows and columns are indexed by T-blocks in Workspace order (sorted by dimension and traces).
struct MatrixPack {
  std::vector<std::vector<LaurentPoly>> Dt;  // Dt[b][c] = [Δ(b) : L(c)]_t
  std::vector<std::vector<long long>> D, C, DtD;
  std::vector<std::vector<int>> blocks;      // partition of T-blocks by linkage in C
  std::vector<int> block_rank;               // rank of D restricted to the block
  std::vector<mpq_class> block_det;          // det of C restricted to the block
  std::vector<bool> rank_one;
  bool bgg = false;
  bool factorization = false;                // C = DᵀD
  std::string verdict;                       // "NOT cellular" or "no obstruction found"
};
MatrixPack matrices(const Workspace& W);

struct QuasiHereditaryResult {
  bool quasi_hereditary = false;
  int irr_A0 = 0, poset_size = 0;
  std::string explanation;
};
QuasiHereditaryResult quasi_hereditary_core(const Workspace& W);

struct SemisimplicityResult {
  bool A0_semisimple = false, A_semisimple = false;
  bool agree() const { return A0_semisimple == A_semisimple; }
};
SemisimplicityResult semisimplicity(const Workspace& W);

// [A : ∇(λ)] against [A^op : Δ(λ*)] over all degrees where either can be nonzero
Check opposite_multiplicity_check(const Workspace& W);

// composition multiplicities of a single-piece A₀-module, one entry per core label
std::vector<int> core_multiplicities(const Workspace& W, const Module& M0);
// [M : L(λ)]_t at t^{deg λ} equals [M_d : L(λ)_d] for every d with L(λ)_d ≠ 0
Check grading_bridge_check(const Workspace& W, const Module& M);

}  // namespace hwc

#pragma once

#include "hwc/ext.hpp"
#include "hwc/quiver.hpp"

namespace hwc {

// M / A·M_{>d}
Module truncate_below(const Workspace& W, const Module& M, int d);
// largest submodule with zero pieces above d, as the annihilator of Aop·(M*)_{>d}
Module truncate_above(const Workspace& W, const Module& M, int d);

// G_{≤d} projective covers Q_d(λ), deg λ ∈ [0,d], and the basic algebra C_d with
// e_λ C_d e_μ = Hom(Q_d(λ), Q_d(μ)) and product x·y = y∘x.
class Truncation {
 public:
  Truncation(const Workspace& W, int d);

  const Workspace& W;
  int d;
  std::vector<Label> labels;
  std::vector<Module> Q;
  BasicAlgebra C;
  std::vector<int> gens;  // generators of C

  int vertex(Label l) const;
  Module J(int v) const;  // injective hull of L(λ) in G_{≤d}
  // ⊕_λ Hom(Q_d(λ), M) as a left C_d-module (pieces keyed by vertex)
  Module image(const Module& M) const;
  Module simple(int v) const { return basic_simple(C, v); }
  const Morphism& morphism(int k) const { return mor_[k]; }

 private:
  std::vector<Morphism> mor_;  // morphism of each basis element of C
  std::vector<std::vector<std::vector<int>>> idx_;  // idx_[v][w]: basis indices
  std::vector<std::vector<Coordinates>> coord_;
};

// W_ℓ = B_ℓ^op: basis (i, j, a) with a a basis element of A_{i-j}, 0 ≤ i,j ≤ ℓ,
// acting on F(M) = ⊕_{i=0}^{ℓ} M_i by M_j → M_i.
struct BellAlgebra {
  int ell = 0;
  std::shared_ptr<Algebra> alg;
  struct Index {
    int i, j, a;
  };
  std::vector<Index> index;
  std::vector<int> gens;
};
BellAlgebra bell_algebra(const Workspace& W, int ell);
Module cover_functor(const Workspace& W, const BellAlgebra& B, const Module& M);
// Σ_{i,j ≤ ℓ} dim A_{i-j}
int bell_dim_formula(const Workspace& W, int ell);
// dim End_{G(A)}(A⟨ℓ⟩) from the Hom solver
int bell_end_dim(const Workspace& W, int ell);
Module shifted_sum(const Workspace& W, int ell);  // A⟨ℓ⟩
// End_{G(A)}(A) → A₀, φ ↦ φ(1), bijective and order-reversing on products
Check bell_zero_check(const Workspace& W);

Check double_centralizer_check(const Truncation& T, const BellAlgebra& B);

struct FaithfulnessReport {
  std::vector<Label> killed;
  bool minus_one_faithful = true;  // Hom(L(λ), Δ(μ)) = 0 for killed λ
  bool cover = true;               // Ext^{0,1}(L(λ), Q_d(μ)) = 0 for killed λ
  bool zero_faithful = true;       // Ext^{0,1}(L(λ), Δ(μ)) = 0 for killed λ
  std::vector<std::string> witnesses;
};
FaithfulnessReport faithfulness_report(const Truncation& T);

struct BasicSetsReport {
  std::vector<Label> basic;                  // λ with D_ℓ(λ) ≠ 0
  std::vector<std::vector<int>> decomposition;  // [S_ℓ(λ) : D_ℓ(μ)], λ over all labels, μ over basic
  bool simples_ok = true;       // D_ℓ(λ) simple, pairwise non-isomorphic, complete
  bool unitriangular = true;    // [S(λ):D(λ)] = 1 and other factors strictly lower
  bool degrees_match = true;    // deg' λ = deg λ
  std::vector<std::string> witnesses;
  bool ok() const { return simples_ok && unitriangular && degrees_match; }
};
BasicSetsReport basic_sets(const Truncation& T, const BellAlgebra& B);

// C_t ≅ e C_d e with e over labels of degree in [d-t, d], shifted down by d-t
Check corner_check(const Workspace& W, int d, int t);
Check corner_check(const Truncation& Td, const Truncation& Tt);

// Supp Soc(U/M) bound for random graded submodules M of U = R^{⊕k}, R = A⁺ or A⁻
struct SocleTrial {
  bool ok = true;
  int trials = 0;
  std::string witness;
};
SocleTrial socle_support_test(AlgPtr R, int max_k, int trials, std::mt19937_64& rng);

}  // namespace hwc

#pragma once

#include <map>
#include <random>

#include "hwc/laurent.hpp"
#include "hwc/radical.hpp"

namespace hwc {

// Graded simple label: T-block b placed in degree s.
struct Label {
  int b = 0;
  int s = 0;
  bool operator==(const Label& o) const { return b == o.b && s == o.s; }
  bool operator!=(const Label& o) const { return !(*this == o); }
  bool operator<(const Label& o) const { return s != o.s ? s < o.s : b < o.b; }
};
std::string label_str(const Label& l);

// Δ for a triangular algebra from a T-module given by matrices for tri.t, placed in degree shift
Module standard_from(const Triangular& tri, const std::vector<Matrix>& rho_t, int shift);
// left ideal B e as a graded B-module, degrees of B, shifted
Module projective_module(AlgPtr B, const Vec& e, int shift);

class Workspace {
 public:
  Workspace(AlgPtr A, const TriangularData& data, uint64_t seed = 0);

  AlgPtr A, Aop;
  Triangular tri, tri_op;
  std::vector<int> gens;
  uint64_t seed;
  mutable std::mt19937_64 rng;

  std::vector<Module> tsimples;  // over tri.Talg, one per T-block
  std::vector<Vec> tcentral;     // central idempotents of T in A coordinates
  int nblocks() const { return static_cast<int>(tsimples.size()); }
  int tdim(int b) const { return tsimples[b].dim(); }
  int N() const { return tri.N(); }
  int N_minus() const { return tri.N_minus(); }

  Module standard(Label l) const;
  Module costandard(Label l) const;
  Module simple(Label l) const;
  Module projective(Label l) const;
  Module injective(Label l) const;
  Module tilting(Label l) const;
  Module regular() const;

  // degree-0 core A₀ and its data
  AlgPtr A0;
  std::vector<int> A0_index;
  std::vector<Label> core_labels;
  std::vector<Module> core_simples;
  Subspace rad_A0;
  IdempotentLift idem;  // A₀ coordinates
  std::vector<Vec> eb;  // per T-block, primitive idempotent in A for L(b,0)₀
  std::vector<Vec> J;   // homogeneous basis of the graded radical
  std::vector<int> Jdeg;
  const std::vector<int>& supp_L(int b) const { return supp_L_[b]; }
  Vec to_A(const Vec& a0) const;
  Vec to_A0(const Vec& a) const;
  Module core_part(const Module& M, int key) const { return degree_part(M, key, A0, A0_index); }

  using TChar = std::map<int, std::vector<long long>>;
  TChar tchar(const Module& M) const;
  std::vector<LaurentPoly> multiplicities(const Module& M) const;
  std::vector<LaurentPoly> multiplicities_bruteforce(const Module& M) const;
  Label simple_label(const Module& S) const;  // S must be simple
  bool is_simple(const Module& M) const;

  std::vector<Label> nabla_head;  // head of ∇(b,0)
  std::vector<Label> proj_socle;  // socle of P(b,0), when simple
  bool socles_simple = true;
  Label h_inv(Label l) const { return {nabla_head[l.b].b, nabla_head[l.b].s + l.s}; }
  Label h(Label l) const;
  bool self_injective() const;

 private:
  std::vector<std::vector<int>> supp_L_;
  std::vector<Module> L0_, D0_, N0_, P0_;
  std::vector<TChar> Lchar_;
};

}  // namespace hwc

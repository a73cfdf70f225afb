#pragma once

#include "hwc/graded.hpp"
#include "hwc/hom.hpp"

namespace hwc {

// {λ : Hom(A, ∇(λ)) ≠ 0 and Hom(Δ(λ), A) ≠ 0}, sorted by (deg, T-block)
std::vector<Label> datum_poset(const Workspace& W);
// {λ : deg λ ∈ Supp A⁺ ∩ −Supp A⁻}
std::vector<Label> datum_poset_formula(const Workspace& W);

// Standard datum on E_A = End(A) ≅ A₀^op. E-products are x ∗ y = y·x in A₀.
struct StandardDatum {
  struct Layer {
    Label lam;
    int nF = 0, nG = 0;
    std::vector<std::vector<Vec>> b;  // b[i][j] = ĝ_i(f̂_j(1)) in A₀ coordinates, i ∈ G, j ∈ F
    Module T, D, Nb;                  // T(λ), Δ(λ), ∇(λ)
    Morphism iota, pi;                // Δ ↪ T ↠ ∇
    std::vector<Vec> v;               // f_j(1) ∈ ∇(λ)₀ (piece coordinates)
    std::vector<Vec> w;               // f̂_j(1) ∈ T(λ)₀
    std::vector<Morphism> g, ghat;    // G basis and lifts
  };
  std::vector<Layer> layers;
  int size() const;
  // flat basis in layer order with the layer index of each element
  std::vector<Vec> basis() const;
  std::vector<int> layer_of() const;
};

struct DatumOptions {
  bool randomize = false;  // random bases and random lifts instead of canonical ones
  uint64_t seed = 0;
};

// throws PreconditionError when A is not self-injective or a lift system is inconsistent
StandardDatum standard_datum(const Workspace& W, const DatumOptions& opt = {});

// products in E_A: x ∗ y = y·x
Vec e_product(const Workspace& W, const Vec& x, const Vec& y);

// left and right multiplication rules modulo E^{<λ} for every A₀ basis element
Check verify_standard_datum(const Workspace& W, const StandardDatum& S);

// spans of layers ≤ λ agree for every λ
bool same_filtration(const StandardDatum& a, const StandardDatum& b);

// τ restricted to A₀ (columns τ(e_k)), from τ on A
Matrix core_tau(const Workspace& W, const Matrix& tau);

struct CellDatumResult {
  bool ok = false;
  std::string error;
  StandardDatum datum;  // F = G with (b_ij)* = b_ji when ok
  std::vector<Check> checks;
};
CellDatumResult cell_datum(const Workspace& W, const Matrix& tau, uint64_t seed = 0);

struct CellModule {
  Label lam;
  int dim_delta0 = 0, dim_nabla0 = 0;  // ∇(λ)₀ and Hom(Δ(λ), A)*
  int dim_Delta_deg0 = 0;              // dim Δ(λ)₀
  Matrix beta;                         // β(j, k) from f_j ∘ g_k = β(j, k)·(π ∘ ι)
  Matrix beta_structure;               // coefficient of b_{il} in b_{ij} ∗ b_{kl}
  int rank = 0;
  bool underlined = false;
  Label head;                          // h⁻¹(λ)
  int tilting_mult = 0;                // [A : T(λ)]
  bool head_iso = false;               // L₀(λ) ≅ L(h⁻¹λ)₀
};
std::vector<CellModule> cell_modules(const Workspace& W, const StandardDatum& S);

}  // namespace hwc

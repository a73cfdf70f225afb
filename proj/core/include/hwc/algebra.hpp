#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hwc/subspace.hpp"

namespace hwc {

struct Term {
  int k;
  Scalar c;
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite-dimensional associative unital algebra given by structure constants.
// Either Z-graded (deg per basis element) or basic: every basis element lies in
// e_tgt B e_src for a complete set of orthogonal idempotents indexed by components.
class Algebra {
 public:
  Algebra() = default;
  Algebra(const Field& f, int n);

  const Field& field() const { return f_; }
  int dim() const { return n_; }

  std::vector<std::string> labels;
  bool basic = false;
  std::vector<int> deg;
  int ncomp = 1;
  std::vector<int> src, tgt;
  Vec unit;

  const std::vector<Term>& prod(int i, int j) const { return table_[static_cast<size_t>(i) * n_ + j]; }
  void set_prod(int i, int j, std::vector<Term> t);
  void add_prod(int i, int j, int k, const Scalar& c);

  Vec mul(const Vec& a, const Vec& b) const;
  Vec mul_basis(int i, int j) const;
  Vec basis_vec(int i) const { return unit_vec(f_, n_, i); }
  Matrix left_mult(const Vec& a) const;
  Matrix right_mult(const Vec& a) const;

  // key an element maps a homogeneous piece to: degree shift or component move
  std::optional<int> target_key(int k, int key) const;
  std::vector<int> of_degree(int d) const;
  int min_deg() const;
  int max_deg() const;
  bool is_graded_trivially() const;

  std::shared_ptr<Algebra> opposite() const;
  std::string label(int i) const { return i < static_cast<int>(labels.size()) ? labels[i] : "e" + std::to_string(i); }

 private:
  Field f_;
  int n_ = 0;
  std::vector<std::vector<Term>> table_;
};

using AlgPtr = std::shared_ptr<const Algebra>;

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct AlgebraReport {
  bool associative = true, unital = true, graded = true;
  std::string witness;
  bool ok() const { return associative && unital && graded; }
};

AlgebraReport validate_algebra(const Algebra& A);

// basis of the subalgebra spanned by vecs; throws PreconditionError if not closed
std::shared_ptr<Algebra> subalgebra(const Algebra& A, const std::vector<Vec>& basis, const std::vector<int>& degs);

// homogeneous components S ∩ A_d of a subspace, sorted by degree
std::vector<std::pair<int, std::vector<Vec>>> graded_components(const Algebra& A, const Subspace& S);
bool is_graded_subspace(const Algebra& A, const Subspace& S);

// basis elements generating A as an algebra, chosen greedily by |degree|
std::vector<int> generating_basis_elements(const Algebra& A);
Subspace generated_subalgebra(const Algebra& A, const std::vector<Vec>& gens);

struct TriangularData {
  Subspace aminus, tpart, aplus;
};

// A = A⁻ ⊗ T ⊗ A⁺ with homogeneous bases and the straightening map.
class Triangular {
 public:
  static Triangular build(AlgPtr A, const TriangularData& data);

  AlgPtr A;
  TriangularData data;
  std::vector<Vec> am, t, ap;  // am[0] = ap[0] = unit
  std::vector<int> am_deg, ap_deg;
  Matrix pbw_inv;              // coordinates in the basis a⁻_p t_q a⁺_r
  std::shared_ptr<Algebra> Talg, Aminus, Aplus;

  int N() const;        // max Supp A⁺
  int N_minus() const;  // min Supp A⁻
  int pbw_index(int p, int q, int r) const { return (p * static_cast<int>(t.size()) + q) * static_cast<int>(ap.size()) + r; }
  // x ∈ A in PBW coordinates
  Vec pbw_coords(const Vec& x) const { return pbw_inv * x; }
  // e_k a⁻_p with the A⁺ part projected to the unit: entries (p', q, c)
  struct StraightTerm {
    int p, q;
    Scalar c;
  };
  const std::vector<StraightTerm>& straighten(int k, int p) const { return table_[static_cast<size_t>(k) * am.size() + p]; }

 private:
  std::vector<std::vector<StraightTerm>> table_;
};

std::vector<Check> validate_triangular(const Algebra& A, const TriangularData& data);
TriangularData opposite_data(const TriangularData& d);

bool check_ambidextrous(const Triangular& tri);
bool check_well_generated(const Triangular& tri);
// Soc A^± = A^±_{±N}: side +1 for A⁺, -1 for A⁻
bool socle_is_top(const Triangular& tri, int side);

// graded-symmetric forms are supported in degree 0
bool is_graded_symmetric_form(const Algebra& A, const Vec& phi);
std::optional<Vec> find_graded_symmetric_form(const Algebra& A, std::mt19937_64& rng);

// columns are τ(e_k)
std::vector<Check> check_anti_involution(const Algebra& A, const Matrix& tau, const TriangularData* tri);

}  // namespace hwc

#pragma once

#include <map>
#include <vector>

#include "hwc/algebra.hpp"

namespace hwc {

// Left module split into homogeneous pieces (degrees for graded algebras,
// idempotent components for basic ones). Basis element k of the algebra maps
// piece s to the piece with key A.target_key(k, key(s)).
class Module {
 public:
  struct Block {
    int to = -1;  // target piece, -1 when the action is zero
    Matrix m;
  };

  Module() = default;
  Module(AlgPtr alg, std::vector<int> keys, std::vector<int> dims);

  AlgPtr alg;
  const Field& field() const { return alg->field(); }
  int dim() const { return total_; }
  int npieces() const { return static_cast<int>(keys_.size()); }
  const std::vector<int>& keys() const { return keys_; }
  const std::vector<int>& dims() const { return dims_; }
  int key(int p) const { return keys_[p]; }
  int piece_dim(int p) const { return dims_[p]; }
  int offset(int p) const { return offs_[p]; }
  int piece_of(int key) const;  // -1 when absent
  int dim_at(int key) const;
  std::vector<int> support() const;

  const Block& block(int k, int p) const { return act_[k][p]; }
  void set_block(int k, int p, Matrix m);

  Vec apply(int k, const Vec& v) const;
  Vec apply(const Vec& a, const Vec& v) const;
  Matrix dense(int k) const;
  Matrix dense(const Vec& a) const;
  // action of an algebra element from piece p into piece q (q fixed)
  Matrix block_of(const Vec& a, int p, int q) const;

  Vec piece_part(const Vec& v, int p) const;
  Vec embed(const Vec& piece_vec, int p) const;

  Module shifted(int s) const;
  static Module from_dense(AlgPtr alg, const std::vector<int>& key_of_basis, const std::vector<Matrix>& dense);

 private:
  std::vector<int> keys_, dims_, offs_;
  int total_ = 0;
  std::vector<std::vector<Block>> act_;
};

using PieceSpaces = std::vector<Subspace>;

PieceSpaces zero_pieces(const Module& M);
PieceSpaces all_pieces(const Module& M);
PieceSpaces add_pieces(const PieceSpaces& a, const PieceSpaces& b);
int total_dim(const PieceSpaces& s);

Module submodule(const Module& M, const PieceSpaces& U);
Module quotient(const Module& M, const PieceSpaces& U);
// piece coordinates of the quotient class of a piece vector
Vec quotient_coords(const PieceSpaces& U, int p, const Vec& piece_vec);

// submodule generated by piece vectors (piece index, vector)
PieceSpaces spin(const Module& M, const std::vector<std::pair<int, Vec>>& seeds, const std::vector<int>& gens);
PieceSpaces spin_into(const Module& M, PieceSpaces start, const std::vector<std::pair<int, Vec>>& seeds, const std::vector<int>& gens);

// dual over the opposite algebra, keys kept
Module dual(const Module& M, AlgPtr op);
Module direct_sum(const Module& a, const Module& b);

// radical and socle for a graded/basic module given a homogeneous basis of a radical ideal
PieceSpaces radical_of(const Module& M, const std::vector<Vec>& rad_basis);
PieceSpaces socle_of(const Module& M, const std::vector<Vec>& rad_basis);
// ρ(x)ρ(y) = ρ(xy) on all basis pairs and 1 acts as identity
bool is_module(const Module& M);

// restriction of one piece to a degree-0 subalgebra given by basis indices
Module degree_part(const Module& M, int key, AlgPtr A0, const std::vector<int>& A0_index);

}  // namespace hwc

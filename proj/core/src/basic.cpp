#include "hwc/basic.hpp"

namespace hwc {

std::vector<Vec> BasicAlgebra::rad_vectors() const {
  std::vector<Vec> out;
  for (int k : rad) out.push_back(alg->basis_vec(k));
  return out;
}

std::vector<int> BasicAlgebra::all_indices() const {
  std::vector<int> out(dim());
  for (int k = 0; k < dim(); ++k) out[k] = k;
  return out;
}

Module basic_projective(const BasicAlgebra& C, int v) {
  const Algebra& B = *C.alg;
  std::vector<std::vector<int>> members(C.nvert());
  std::vector<int> pos(B.dim(), -1);
  for (int k = 0; k < B.dim(); ++k)
    if (B.src[k] == v) {
      pos[k] = static_cast<int>(members[B.tgt[k]].size());
      members[B.tgt[k]].push_back(k);
    }
  std::vector<int> keys, dims;
  for (int w = 0; w < C.nvert(); ++w)
    if (!members[w].empty()) {
      keys.push_back(w);
      dims.push_back(static_cast<int>(members[w].size()));
    }
  Module P(C.alg, keys, dims);
  for (int x = 0; x < B.dim(); ++x) {
    int a = B.src[x], b = B.tgt[x];
    int pa = P.piece_of(a), pb = P.piece_of(b);
    if (pa < 0 || pb < 0) continue;
    Matrix m(B.field(), P.piece_dim(pb), P.piece_dim(pa));
    bool nz = false;
    for (int j = 0; j < P.piece_dim(pa); ++j)
      for (const auto& t : B.prod(x, members[a][j])) {
        if (pos[t.k] < 0 || B.tgt[t.k] != b) throw std::logic_error("basic algebra: product leaves e_b C e_v");
        m(pos[t.k], j) += t.c;
        nz = true;
      }
    if (nz) P.set_block(x, pa, std::move(m));
  }
  return P;
}

Module basic_simple(const BasicAlgebra& C, int v) {
  Module S(C.alg, {v}, {1});
  Matrix one = Matrix::identity(C.field(), 1);
  S.set_block(C.idem[v], 0, one);
  return S;
}

Subspace rad_power(const BasicAlgebra& C, int k) {
  Subspace cur = Subspace::span(C.field(), C.dim(), C.rad_vectors());
  for (int i = 1; i < k && cur.dim(); ++i) {
    Subspace next(C.field(), C.dim());
    for (int r : C.rad)
      for (const Vec& s : cur.basis()) next.add(C.alg->mul(C.alg->basis_vec(r), s));
    cur = std::move(next);
  }
  return cur;
}

int loewy_length(const BasicAlgebra& C) {
  int k = 1;
  while (rad_power(C, k).dim()) ++k;
  return k;
}

std::vector<int> basic_generators(const BasicAlgebra& C) {
  std::vector<int> out = C.idem;
  Subspace S = rad_power(C, 2);
  for (int r : C.rad)
    if (S.add(C.alg->basis_vec(r))) out.push_back(r);
  return out;
}

Check check_basic(const BasicAlgebra& C) {
  Check c{"basic algebra", true, ""};
  const Algebra& B = *C.alg;
  Vec sum = zero_vec(B.field(), B.dim());
  for (int v = 0; v < C.nvert(); ++v) {
    sum = add(sum, B.basis_vec(C.idem[v]));
    for (int w = 0; w < C.nvert(); ++w) {
      Vec p = B.mul_basis(C.idem[v], C.idem[w]);
      Vec want = v == w ? B.basis_vec(C.idem[v]) : zero_vec(B.field(), B.dim());
      if (p != want) return {c.name, false, "idempotents " + std::to_string(v) + "," + std::to_string(w)};
    }
  }
  if (sum != B.unit) return {c.name, false, "idempotents do not sum to 1"};
  for (int k = 0; k < B.dim(); ++k) {
    if (B.mul_basis(C.idem[B.tgt[k]], k) != B.basis_vec(k) || B.mul_basis(k, C.idem[B.src[k]]) != B.basis_vec(k))
      return {c.name, false, "basis element " + std::to_string(k) + " not in its Peirce component"};
  }
  if (static_cast<int>(C.rad.size()) + C.nvert() != B.dim()) return {c.name, false, "radical size"};
  if (rad_power(C, B.dim() + 1).dim()) return {c.name, false, "radical not nilpotent"};
  return c;
}

Vec flatten(const Morphism& f) {
  Vec out;
  for (const Matrix& b : f.blocks)
    for (const Scalar& x : b.data()) out.push_back(x);
  return out;
}

}  // namespace hwc

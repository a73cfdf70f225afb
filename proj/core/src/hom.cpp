#include "hwc/hom.hpp"

namespace hwc {

namespace {

struct Layout {
  std::vector<int> base, npiece;
  int total = 0;
};

Layout layout(const Module& M, const Module& N) {
  Layout L;
  for (int p = 0; p < M.npieces(); ++p) {
    int q = N.piece_of(M.key(p));
    L.npiece.push_back(q);
    L.base.push_back(L.total);
    if (q >= 0) L.total += N.piece_dim(q) * M.piece_dim(p);
  }
  return L;
}

}  // namespace

std::vector<Morphism> hom(const Module& M, const Module& N, const std::vector<int>& gens) {
  const Field& f = M.field();
  Layout L = layout(M, N);
  std::vector<Morphism> out;
  if (!L.total) return out;
  Echelon eq(f, L.total);
  for (int g : gens)
    for (int p = 0; p < M.npieces(); ++p) {
      auto tk = M.alg->target_key(g, M.key(p));
      if (!tk) continue;
      int tN = N.piece_of(*tk);
      if (tN < 0) continue;
      const int qN = L.npiece[p];
      const int mp = M.piece_dim(p), nt = N.piece_dim(tN);
      const Matrix* GN = nullptr;
      if (qN >= 0 && N.block(g, qN).to == tN) GN = &N.block(g, qN).m;
      const auto& bm = M.block(g, p);
      const Matrix* GM = bm.to >= 0 ? &bm.m : nullptr;
      int tM = bm.to;
      if (!GN && !GM) continue;
      for (int r = 0; r < nt; ++r)
        for (int c = 0; c < mp; ++c) {
          Vec row = zero_vec(f, L.total);
          bool any = false;
          if (GN) {
            const int nq = N.piece_dim(qN);
            for (int i = 0; i < nq; ++i) {
              const Scalar& x = (*GN)(r, i);
              if (x.is_zero()) continue;
              row[L.base[p] + i * mp + c] += x;
              any = true;
            }
          }
          if (GM && L.npiece[tM] == tN) {
            const int mt = M.piece_dim(tM);
            for (int j = 0; j < mt; ++j) {
              const Scalar& x = (*GM)(j, c);
              if (x.is_zero()) continue;
              row[L.base[tM] + r * mt + j] -= x;
              any = true;
            }
          }
          if (any) eq.add(std::move(row));
        }
    }
  for (const Vec& sol : eq.kernel()) {
    Morphism m;
    for (int p = 0; p < M.npieces(); ++p) {
      int q = L.npiece[p];
      int rows = q >= 0 ? N.piece_dim(q) : 0;
      Matrix b(f, rows, M.piece_dim(p));
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < M.piece_dim(p); ++j) b(i, j) = sol[L.base[p] + i * M.piece_dim(p) + j];
      m.blocks.push_back(std::move(b));
    }
    out.push_back(std::move(m));
  }
  return out;
}

int hom_dim(const Module& M, const Module& N, const std::vector<int>& gens) {
  return static_cast<int>(hom(M, N, gens).size());
}

Morphism zero_morphism(const Module& M, const Module& N) {
  Morphism m;
  for (int p = 0; p < M.npieces(); ++p) {
    int q = N.piece_of(M.key(p));
    m.blocks.emplace_back(M.field(), q >= 0 ? N.piece_dim(q) : 0, M.piece_dim(p));
  }
  return m;
}

Matrix to_dense(const Module& M, const Module& N, const Morphism& f) {
  Matrix d(M.field(), N.dim(), M.dim());
  for (int p = 0; p < M.npieces(); ++p) {
    int q = N.piece_of(M.key(p));
    if (q < 0) continue;
    const Matrix& b = f.blocks[p];
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) d(N.offset(q) + i, M.offset(p) + j) = b(i, j);
  }
  return d;
}

Vec apply(const Module& M, const Module& N, const Morphism& f, const Vec& v) { return to_dense(M, N, f) * v; }

Morphism compose(const Module& L, const Module& M, const Module& N, const Morphism& g, const Morphism& f) {
  Morphism h;
  for (int p = 0; p < L.npieces(); ++p) {
    int q = M.piece_of(L.key(p));
    int r = N.piece_of(L.key(p));
    Matrix b(L.field(), r >= 0 ? N.piece_dim(r) : 0, L.piece_dim(p));
    if (q >= 0 && r >= 0) b = g.blocks[q] * f.blocks[p];
    h.blocks.push_back(std::move(b));
  }
  return h;
}

Morphism combine(const std::vector<Morphism>& basis, const Vec& c) {
  Morphism m = basis.at(0);
  for (auto& b : m.blocks) b = b.scaled(c[0]);
  for (size_t i = 1; i < basis.size(); ++i)
    for (size_t p = 0; p < m.blocks.size(); ++p) m.blocks[p].add_scaled(c[i], basis[i].blocks[p]);
  return m;
}

bool is_homomorphism(const Module& M, const Module& N, const Morphism& f) {
  Matrix F = to_dense(M, N, f);
  for (int k = 0; k < M.alg->dim(); ++k)
    if (F * M.dense(k) != N.dense(k) * F) return false;
  return true;
}

bool is_zero(const Morphism& f) {
  for (const auto& b : f.blocks)
    if (!b.is_zero()) return false;
  return true;
}

bool isomorphic_simple(const Module& S, const Module& T, const std::vector<int>& gens) {
  if (S.dim() != T.dim() || S.keys() != T.keys() || S.dims() != T.dims()) return false;
  for (const auto& f : hom(S, T, gens))
    if (rank(to_dense(S, T, f)) == S.dim()) return true;
  return false;
}

}  // namespace hwc

#include "hwc/ext.hpp"

namespace hwc {

namespace {

struct FreeModule {
  Module P;
  std::vector<int> verts;
  // piece w of P: concatenation over summands j of basis elements of e_w C e_{v_j}
  std::vector<std::vector<std::pair<int, int>>> slot;  // per piece position: (summand, C basis index)
};

FreeModule free_module(const BasicAlgebra& C, const std::vector<int>& verts) {
  FreeModule F;
  F.verts = verts;
  if (verts.empty()) return F;
  Module P = basic_projective(C, verts[0]);
  for (size_t j = 1; j < verts.size(); ++j) P = direct_sum(P, basic_projective(C, verts[j]));
  F.P = P;
  F.slot.resize(P.npieces());
  for (int p = 0; p < P.npieces(); ++p) {
    int w = P.key(p);
    for (size_t j = 0; j < verts.size(); ++j)
      for (int k = 0; k < C.dim(); ++k)
        if (C.alg->src[k] == verts[j] && C.alg->tgt[k] == w) F.slot[p].push_back({static_cast<int>(j), k});
  }
  return F;
}

// element of P (piece p coordinates) split into C elements per summand
std::vector<Vec> split_element(const BasicAlgebra& C, const FreeModule& F, int p, const Vec& v) {
  std::vector<Vec> out(F.verts.size(), zero_vec(C.field(), C.dim()));
  for (size_t i = 0; i < v.size(); ++i) {
    auto [j, k] = F.slot[p][i];
    out[j][k] += v[i];
  }
  return out;
}

// top generators of M: per piece, complement of the radical
std::vector<std::pair<int, Vec>> top_generators(const BasicAlgebra& C, const Module& M) {
  PieceSpaces R = radical_of(M, C.rad_vectors());
  std::vector<std::pair<int, Vec>> out;
  for (int p = 0; p < M.npieces(); ++p)
    for (int c : R[p].complement_columns()) out.push_back({p, unit_vec(M.field(), M.piece_dim(p), c)});
  return out;
}

}  // namespace

Resolution minimal_resolution(const BasicAlgebra& C, const Module& X, int max_len) {
  Resolution R;
  Module M = X;
  // embedding of the current syzygy into the previous free module, per piece
  std::vector<Matrix> embed;
  const FreeModule* prev = nullptr;
  FreeModule prevF, curF;
  for (int i = 0; i <= max_len; ++i) {
    if (M.dim() == 0) {
      R.complete = true;
      break;
    }
    auto tops = top_generators(C, M);
    std::vector<int> verts;
    for (auto& [p, v] : tops) verts.push_back(M.key(p));
    curF = free_module(C, verts);
    R.gens.push_back(verts);
    if (i > 0) {
      std::vector<std::vector<Vec>> d;
      for (auto& [p, v] : tops) {
        int pp = prev->P.piece_of(M.key(p));
        d.push_back(split_element(C, *prev, pp, embed[p] * v));
      }
      R.diff.push_back(std::move(d));
    } else {
      R.diff.push_back({});
    }
    // map curF.P -> M, generator j ↦ tops[j]
    const Module& P = curF.P;
    PieceSpaces K;
    for (int q = 0; q < P.npieces(); ++q) {
      int mq = M.piece_of(P.key(q));
      Matrix pi(M.field(), mq >= 0 ? M.piece_dim(mq) : 0, P.piece_dim(q));
      for (int c = 0; c < P.piece_dim(q); ++c) {
        auto [j, k] = curF.slot[q][c];
        auto [tp, tv] = tops[j];
        const auto& b = M.block(k, tp);
        if (b.to < 0) continue;
        if (b.to != mq) throw std::logic_error("resolution: piece mismatch");
        pi.set_col(c, b.m * tv);
      }
      K.push_back(kernel(pi));
    }
    Module S = submodule(P, K);
    embed.clear();
    for (int q = 0, s = 0; q < P.npieces(); ++q) {
      if (!K[q].dim()) continue;
      embed.push_back(K[q].basis_matrix().transpose());
      ++s;
    }
    prevF = std::move(curF);
    prev = &prevF;
    M = std::move(S);
  }
  if (M.dim() == 0) R.complete = true;
  return R;
}

std::vector<int> ext_dims(const BasicAlgebra& C, const Resolution& R, const Module& Y, int max_i) {
  const Field& f = C.field();
  // Hom(P_i, Y) = ⊕_g Y_{v_g}
  auto hdim = [&](int i) {
    int n = 0;
    if (i < static_cast<int>(R.gens.size()))
      for (int v : R.gens[i]) n += Y.dim_at(v);
    return n;
  };
  auto offsets = [&](int i) {
    std::vector<int> off;
    int n = 0;
    for (int v : R.gens[i]) {
      off.push_back(n);
      n += Y.dim_at(v);
    }
    return off;
  };
  // δ_i : Hom(P_{i-1}, Y) → Hom(P_i, Y)
  auto delta = [&](int i) {
    Matrix D(f, hdim(i), hdim(i - 1));
    if (i >= static_cast<int>(R.gens.size())) return D;
    auto oi = offsets(i), op = offsets(i - 1);
    for (size_t g = 0; g < R.gens[i].size(); ++g) {
      int vg = R.gens[i][g];
      int pg = Y.piece_of(vg);
      if (pg < 0) continue;
      for (size_t j = 0; j < R.gens[i - 1].size(); ++j) {
        int vj = R.gens[i - 1][j];
        int pj = Y.piece_of(vj);
        if (pj < 0) continue;
        const Vec& c = R.diff[i][g][j];
        if (is_zero(c)) continue;
        Matrix blk = Y.block_of(c, pj, pg);
        for (int r = 0; r < blk.rows(); ++r)
          for (int s = 0; s < blk.cols(); ++s) D(oi[g] + r, op[j] + s) += blk(r, s);
      }
    }
    return D;
  };
  if (R.length() < max_i + 1 && !R.complete) throw std::logic_error("resolution too short for requested Ext degree");
  std::vector<int> out;
  int prev_rank = 0;
  for (int i = 0; i <= max_i; ++i) {
    int n = hdim(i);
    int r_next = n ? rank(delta(i + 1)) : 0;
    out.push_back(n - r_next - prev_rank);
    prev_rank = r_next;
  }
  return out;
}

std::vector<int> ext_dims(const BasicAlgebra& C, const Module& X, const Module& Y, int max_i) {
  return ext_dims(C, minimal_resolution(C, X, max_i + 1), Y, max_i);
}

int projective_dimension(const BasicAlgebra& C, const Module& X, int max_len) {
  Resolution R = minimal_resolution(C, X, max_len + 1);
  if (!R.complete) return -1;
  return R.length();
}

}  // namespace hwc

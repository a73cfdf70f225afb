#include "hwc/matrices.hpp"

#include <numeric>

#include "hwc/datum.hpp"
#include "hwc/hom.hpp"

namespace hwc {

namespace {

Matrix to_rational(const std::vector<std::vector<long long>>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Field Q = Field::rationals();
  Matrix out(Q, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out(i, j) = Q.from_int(m[rows[i]][cols[j]]);
  return out;
}

std::vector<long long> at_one(const std::vector<LaurentPoly>& v) {
  std::vector<long long> out;
  for (const auto& p : v) out.push_back(p.at_one());
  return out;
}

}  // namespace

MatrixPack matrices(const Workspace& W) {
  MatrixPack M;
  const int n = W.nblocks();
  M.bgg = true;
  for (int b = 0; b < n; ++b) {
    auto d = W.multiplicities(W.standard({b, 0}));
    auto nb = W.multiplicities(W.costandard({b, 0}));
    if (d != nb) M.bgg = false;
    M.Dt.push_back(d);
    M.D.push_back(at_one(d));
    M.C.push_back(at_one(W.multiplicities(W.projective({b, 0}))));
  }
  M.DtD.assign(n, std::vector<long long>(n, 0));
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      for (int a = 0; a < n; ++a) M.DtD[b][c] += M.D[a][b] * M.D[a][c];
  M.factorization = M.C == M.DtD;

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      if (M.C[b][c] || M.C[c][b]) parent[find(b)] = find(c);
  std::map<int, std::vector<int>> groups;
  for (int b = 0; b < n; ++b) groups[find(b)].push_back(b);
  for (auto& [r, g] : groups) M.blocks.push_back(g);
  std::sort(M.blocks.begin(), M.blocks.end());

  bool all_rank_one = true, big_block = false;
  for (const auto& g : M.blocks) {
    int r = rank(to_rational(M.D, g, g));
    M.block_rank.push_back(r);
    M.rank_one.push_back(r == 1);
    all_rank_one = all_rank_one && r == 1;
    big_block = big_block || g.size() >= 2;
    M.block_det.push_back(determinant(to_rational(M.C, g, g)).to_mpq());
  }
  M.verdict = M.bgg && all_rank_one && big_block ? "NOT cellular" : "no obstruction found";
  return M;
}

QuasiHereditaryResult quasi_hereditary_core(const Workspace& W) {
  QuasiHereditaryResult r;
  r.irr_A0 = static_cast<int>(W.core_labels.size());
  r.poset_size = static_cast<int>(datum_poset(W).size());
  r.quasi_hereditary = true;
  for (int b = 0; b < W.nblocks(); ++b) {
    size_t l = W.supp_L(b).size();
    size_t d = W.standard({b, 0}).support().size();
    size_t c = W.costandard({b, 0}).support().size();
    if (l != d || l != c) {
      r.quasi_hereditary = false;
      r.explanation = "|Supp L" + label_str({b, 0}) + "| = " + std::to_string(l) + " but |Supp Δ| = " + std::to_string(d) +
                      " and |Supp ∇| = " + std::to_string(c);
      break;
    }
  }
  if (r.quasi_hereditary) r.explanation = "L(λ) has the support of Δ(λ) and ∇(λ) for every λ in degree 0";
  return r;
}

SemisimplicityResult semisimplicity(const Workspace& W) {
  SemisimplicityResult r;
  r.A0_semisimple = W.rad_A0.dim() == 0;
  r.A_semisimple = true;
  for (int b = 0; b < W.nblocks(); ++b)
    if (W.standard({b, 0}).dim() != W.simple({b, 0}).dim()) r.A_semisimple = false;
  return r;
}

Check opposite_multiplicity_check(const Workspace& W) {
  Check c{"[A:∇(λ)] = [A^op:Δ(λ*)]", true, ""};
  Workspace Wop(W.Aop, opposite_data(W.tri.data), W.seed);
  // λ* is the T^op-simple with the same trace function
  auto traces = [](const Workspace& X, int b) {
    std::vector<mpq_class> t;
    const Module& S = X.tsimples[b];
    for (int q = 0; q < X.tri.Talg->dim(); ++q) {
      Matrix d = S.dense(q);
      Scalar s = X.A->field().zero();
      for (int i = 0; i < d.rows(); ++i) s += d(i, i);
      t.push_back(s.to_mpq());
    }
    return t;
  };
  Module R = W.regular();
  const int lo = W.N_minus() - W.N(), hi = W.N() - W.N_minus();
  for (int b = 0; b < W.nblocks() && c.ok; ++b) {
    int bs = -1;
    for (int x = 0; x < Wop.nblocks(); ++x)
      if (traces(Wop, x) == traces(W, b)) bs = x;
    if (bs < 0) {
      c.ok = false;
      c.detail = "no dual T-simple for block " + std::to_string(b);
      break;
    }
    for (int s = lo; s <= hi; ++s) {
      int lhs = hom_dim(W.standard({b, s}), R, W.gens);
      int rhs = Wop.costandard({bs, s}).dim_at(0);
      if (lhs != rhs) {
        c.ok = false;
        c.detail = "λ = " + label_str({b, s}) + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs);
        break;
      }
    }
  }
  return c;
}

std::vector<int> core_multiplicities(const Workspace& W, const Module& M0) {
  std::vector<int> out(W.core_labels.size(), 0);
  std::vector<int> gens(W.A0->dim());
  std::iota(gens.begin(), gens.end(), 0);
  std::vector<Vec> rad(W.rad_A0.basis().begin(), W.rad_A0.basis().end());
  Module U = M0;
  while (U.dim()) {
    PieceSpaces R = radical_of(U, rad);
    Module layer = quotient(U, R);
    for (size_t i = 0; i < W.core_simples.size(); ++i) out[i] += hom_dim(layer, W.core_simples[i], gens);
    U = submodule(U, R);
  }
  return out;
}

Check grading_bridge_check(const Workspace& W, const Module& M) {
  Check c{"graded multiplicity bridge", true, ""};
  auto mult = W.multiplicities(M);
  for (int d : M.support()) {
    auto cm = core_multiplicities(W, W.core_part(M, d));
    for (size_t i = 0; i < W.core_labels.size(); ++i) {
      // L(b, s)_d ≅ L(b, s - d)_0
      Label l = W.core_labels[i];
      long long lhs = mult[l.b].coeff(l.s + d);
      if (lhs != cm[i]) {
        c.ok = false;
        c.detail = "degree " + std::to_string(d) + ", label " + label_str({l.b, l.s + d}) + ": " + std::to_string(lhs) + " vs " +
                   std::to_string(cm[i]);
        return c;
      }
    }
  }
  return c;
}

}  // namespace hwc

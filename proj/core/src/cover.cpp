#include "hwc/cover.hpp"

#include <map>

namespace hwc {

namespace {

std::vector<std::pair<int, Vec>> pieces_above(const Module& M, int d) {
  std::vector<std::pair<int, Vec>> seeds;
  for (int p = 0; p < M.npieces(); ++p)
    if (M.key(p) > d)
      for (int j = 0; j < M.piece_dim(p); ++j) seeds.push_back({p, unit_vec(M.field(), M.piece_dim(p), j)});
  return seeds;
}

Morphism identity_morphism(const Module& M) {
  Morphism f;
  for (int p = 0; p < M.npieces(); ++p) f.blocks.push_back(Matrix::identity(M.field(), M.piece_dim(p)));
  return f;
}

bool same_module_up_to_shift(const Module& a, const Module& b, int shift) {
  if (a.npieces() != b.npieces()) return false;
  for (int p = 0; p < a.npieces(); ++p)
    if (a.key(p) + shift != b.key(p) || a.piece_dim(p) != b.piece_dim(p)) return false;
  for (int k = 0; k < a.alg->dim(); ++k)
    for (int p = 0; p < a.npieces(); ++p) {
      const auto& x = a.block(k, p);
      const auto& y = b.block(k, p);
      if (x.to != y.to) return false;
      if (x.to >= 0 && x.m != y.m) return false;
    }
  return true;
}

Subspace ideal_product(const Algebra& B, const Subspace& I, const Subspace& J) {
  Subspace out(B.field(), B.dim());
  for (const Vec& x : I.basis())
    for (const Vec& y : J.basis()) out.add(B.mul(x, y));
  return out;
}

bool nilpotent_ideal(const Algebra& B, const Subspace& I) {
  Subspace cur = I;
  while (cur.dim()) {
    Subspace next = ideal_product(B, I, cur);
    if (next.dim() == cur.dim()) return false;
    cur = std::move(next);
  }
  return true;
}

int top_degree(const Module& M) {
  int t = 0;
  bool any = false;
  for (int p = 0; p < M.npieces(); ++p)
    if (M.piece_dim(p) && (!any || M.key(p) > t)) {
      t = M.key(p);
      any = true;
    }
  return t;
}

}  // namespace

Module truncate_below(const Workspace& W, const Module& M, int d) {
  return quotient(M, spin(M, pieces_above(M, d), W.gens));
}

Module truncate_above(const Workspace& W, const Module& M, int d) {
  Module D = dual(M, W.Aop);
  PieceSpaces U = spin(D, pieces_above(D, d), W.gens);
  PieceSpaces perp;
  for (int p = 0; p < M.npieces(); ++p) {
    if (U[p].dim()) perp.push_back(kernel(U[p].basis_matrix()));
    else perp.push_back(Subspace::whole(M.field(), M.piece_dim(p)));
  }
  return submodule(M, perp);
}

Truncation::Truncation(const Workspace& w, int dd) : W(w), d(dd) {
  if (d < 0) throw PreconditionError("truncation bound must be non-negative");
  for (int s = 0; s <= d; ++s)
    for (int b = 0; b < W.nblocks(); ++b) labels.push_back({b, s});
  const int n = static_cast<int>(labels.size());
  for (const Label& l : labels) Q.push_back(truncate_below(W, W.projective(l), d));
  const Field& f = W.A->field();

  std::vector<std::vector<std::vector<Morphism>>> H(n, std::vector<std::vector<Morphism>>(n));
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) {
      auto basis = hom(Q[v], Q[u], W.gens);
      if (v != u) {
        H[v][u] = std::move(basis);
        continue;
      }
      // radical of End(Q): maps into rad Q
      PieceSpaces R = radical_of(Q[v], W.J);
      Matrix top(f, 0, static_cast<int>(basis.size()));
      std::vector<Vec> cols;
      for (const Morphism& h : basis) {
        Vec c;
        for (int p = 0; p < Q[v].npieces(); ++p)
          for (int j = 0; j < Q[v].piece_dim(p); ++j) {
            Vec q = quotient_coords(R, p, h.blocks[p].col(j));
            c.insert(c.end(), q.begin(), q.end());
          }
        cols.push_back(c);
      }
      std::vector<Morphism> rad;
      if (!cols.empty()) {
        Matrix M = Matrix::from_cols(f, static_cast<int>(cols[0].size()), cols);
        Matrix K = kernel_basis(M);
        for (int r = 0; r < K.rows(); ++r) rad.push_back(combine(basis, K.row(r)));
      }
      if (rad.size() + 1 != basis.size()) throw std::logic_error("End(Q_d) is not local with residue field K");
      H[v][v] = std::move(rad);
    }

  auto alg = std::make_shared<Algebra>(f, 0);
  std::vector<int> src, tgt;
  std::vector<std::string> names;
  idx_.assign(n, std::vector<std::vector<int>>(n));
  for (int v = 0; v < n; ++v) {
    idx_[v][v].push_back(static_cast<int>(mor_.size()));
    mor_.push_back(identity_morphism(Q[v]));
    tgt.push_back(v);
    src.push_back(v);
    names.push_back("e" + label_str(labels[v]));
    C.idem.push_back(v);
  }
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      for (size_t k = 0; k < H[v][u].size(); ++k) {
        int id = static_cast<int>(mor_.size());
        idx_[v][u].push_back(id);
        mor_.push_back(std::move(H[v][u][k]));
        tgt.push_back(v);
        src.push_back(u);
        names.push_back(label_str(labels[v]) + ">" + label_str(labels[u]) + "#" + std::to_string(k));
        C.rad.push_back(id);
      }
  const int dim = static_cast<int>(mor_.size());
  auto B = std::make_shared<Algebra>(f, dim);
  B->basic = true;
  B->ncomp = n;
  B->src = src;
  B->tgt = tgt;
  B->labels = names;
  coord_.assign(n, std::vector<Coordinates>(n));
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) {
      std::vector<Vec> fl;
      for (int k : idx_[v][u]) fl.push_back(flatten(mor_[k]));
      int len = 0;
      for (int p = 0; p < Q[v].npieces(); ++p) {
        int q = Q[u].piece_of(Q[v].key(p));
        len += (q >= 0 ? Q[u].piece_dim(q) : 0) * Q[v].piece_dim(p);
      }
      coord_[v][u] = Coordinates(f, len, fl);
    }
  for (int v = 0; v < n; ++v)
    for (int w2 = 0; w2 < n; ++w2)
      for (int u = 0; u < n; ++u)
        for (int x : idx_[v][w2])
          for (int y : idx_[w2][u]) {
            Morphism g = compose(Q[v], Q[w2], Q[u], mor_[y], mor_[x]);
            Vec c = coord_[v][u].coords_or_throw(flatten(g));
            std::vector<Term> terms;
            for (size_t i = 0; i < c.size(); ++i)
              if (!c[i].is_zero()) terms.push_back({idx_[v][u][i], c[i]});
            B->set_prod(x, y, std::move(terms));
          }
  Vec unit = zero_vec(f, dim);
  for (int v = 0; v < n; ++v) unit[v] = f.one();
  B->unit = unit;
  C.alg = B;
  for (const Label& l : labels) C.names.push_back(label_str(l));
  gens = basic_generators(C);
}

int Truncation::vertex(Label l) const {
  for (size_t v = 0; v < labels.size(); ++v)
    if (labels[v] == l) return static_cast<int>(v);
  return -1;
}

Module Truncation::J(int v) const { return truncate_above(W, W.injective(labels[v]), d); }

Module Truncation::image(const Module& M) const {
  const int n = static_cast<int>(labels.size());
  const Field& f = W.A->field();
  std::vector<std::vector<Morphism>> H(n);
  std::vector<Coordinates> co(n);
  std::vector<int> keys, dims;
  for (int v = 0; v < n; ++v) {
    H[v] = hom(Q[v], M, W.gens);
    std::vector<Vec> fl;
    for (const auto& h : H[v]) fl.push_back(flatten(h));
    int len = 0;
    for (int p = 0; p < Q[v].npieces(); ++p) {
      int q = M.piece_of(Q[v].key(p));
      len += (q >= 0 ? M.piece_dim(q) : 0) * Q[v].piece_dim(p);
    }
    co[v] = Coordinates(f, len, fl);
    if (!H[v].empty()) {
      keys.push_back(v);
      dims.push_back(static_cast<int>(H[v].size()));
    }
  }
  Module X(C.alg, keys, dims);
  for (int x = 0; x < C.dim(); ++x) {
    int v = C.alg->tgt[x], u = C.alg->src[x];
    int pu = X.piece_of(u), pv = X.piece_of(v);
    if (pu < 0 || pv < 0) continue;
    Matrix m(f, X.piece_dim(pv), X.piece_dim(pu));
    for (int j = 0; j < X.piece_dim(pu); ++j) m.set_col(j, co[v].coords_or_throw(flatten(compose(Q[v], Q[u], M, H[u][j], mor_[x]))));
    if (!m.is_zero()) X.set_block(x, pu, std::move(m));
  }
  return X;
}

BellAlgebra bell_algebra(const Workspace& W, int ell) {
  if (ell < 0) throw PreconditionError("ℓ must be non-negative");
  const Algebra& A = *W.A;
  BellAlgebra B;
  B.ell = ell;
  std::map<std::tuple<int, int, int>, int> at;
  for (int i = 0; i <= ell; ++i)
    for (int j = 0; j <= ell; ++j)
      for (int a : A.of_degree(i - j)) {
        at[{i, j, a}] = static_cast<int>(B.index.size());
        B.index.push_back({i, j, a});
      }
  const int n = static_cast<int>(B.index.size());
  auto alg = std::make_shared<Algebra>(A.field(), n);
  alg->basic = true;
  alg->ncomp = ell + 1;
  for (const auto& x : B.index) {
    alg->tgt.push_back(x.i);
    alg->src.push_back(x.j);
    alg->labels.push_back("(" + std::to_string(x.i) + "," + std::to_string(x.j) + "," + A.label(x.a) + ")");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& X = B.index[x];
      const auto& Y = B.index[y];
      if (X.j != Y.i) continue;
      std::vector<Term> terms;
      for (const auto& t : A.prod(X.a, Y.a)) terms.push_back({at.at({X.i, Y.j, t.k}), t.c});
      alg->set_prod(x, y, std::move(terms));
    }
  Vec unit = zero_vec(A.field(), n);
  for (int i = 0; i <= ell; ++i)
    for (int k : A.of_degree(0)) unit[at.at({i, i, k})] = A.unit[k];
  alg->unit = unit;
  B.alg = alg;
  for (int x = 0; x < n; ++x) B.gens.push_back(x);
  return B;
}

Module cover_functor(const Workspace& W, const BellAlgebra& B, const Module& M) {
  (void)W;
  std::vector<int> keys, dims;
  for (int i = 0; i <= B.ell; ++i)
    if (M.dim_at(i)) {
      keys.push_back(i);
      dims.push_back(M.dim_at(i));
    }
  Module F(B.alg, keys, dims);
  for (int x = 0; x < B.alg->dim(); ++x) {
    const auto& X = B.index[x];
    int pj = F.piece_of(X.j), pi = F.piece_of(X.i);
    if (pj < 0 || pi < 0) continue;
    const auto& b = M.block(X.a, M.piece_of(X.j));
    if (b.to < 0 || b.to != M.piece_of(X.i)) continue;
    F.set_block(x, pj, b.m);
  }
  return F;
}

int bell_dim_formula(const Workspace& W, int ell) {
  int n = 0;
  for (int i = 0; i <= ell; ++i)
    for (int j = 0; j <= ell; ++j) n += static_cast<int>(W.A->of_degree(i - j).size());
  return n;
}

Module shifted_sum(const Workspace& W, int ell) {
  Module R = W.regular();
  Module S = R;
  for (int i = 1; i <= ell; ++i) S = direct_sum(S, R.shifted(i));
  return S;
}

int bell_end_dim(const Workspace& W, int ell) {
  Module S = shifted_sum(W, ell);
  return hom_dim(S, S, W.gens);
}

Check bell_zero_check(const Workspace& W) {
  Check c{"B_0 = A_0^op", true, ""};
  Module R = W.regular();
  auto ends = hom(R, R, W.gens);
  int p0 = R.piece_of(0);
  Vec one = W.to_A0(W.A->unit);
  auto at_one = [&](const Morphism& f) { return f.blocks[p0] * one; };
  std::vector<Vec> imgs;
  for (const auto& f : ends) imgs.push_back(at_one(f));
  if (static_cast<int>(ends.size()) != W.A0->dim() || rank(Matrix::from_rows(W.A->field(), W.A0->dim(), imgs)) != W.A0->dim())
    return {c.name, false, "evaluation at 1 is not bijective"};
  for (size_t i = 0; i < ends.size(); ++i)
    for (size_t j = 0; j < ends.size(); ++j) {
      Vec lhs = at_one(compose(R, R, R, ends[i], ends[j]));
      Vec rhs = W.A0->mul(imgs[j], imgs[i]);
      if (lhs != rhs) return {c.name, false, "product is not reversed"};
    }
  c.detail = "dim " + std::to_string(ends.size());
  return c;
}

Check double_centralizer_check(const Truncation& T, const BellAlgebra& B) {
  Check c{"double centralizer", true, ""};
  const int n = static_cast<int>(T.labels.size());
  std::vector<Module> F;
  for (const auto& q : T.Q) F.push_back(cover_functor(T.W, B, q));
  int total_G = 0, total_B = 0;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) {
      std::vector<Vec> restricted;
      int dG = 0;
      for (int x = 0; x < T.C.dim(); ++x) {
        if (T.C.alg->tgt[x] != v || T.C.alg->src[x] != u) continue;
        ++dG;
        const Morphism& f = T.morphism(x);
        Morphism r;
        for (int p = 0; p < F[v].npieces(); ++p) r.blocks.push_back(f.blocks[T.Q[v].piece_of(F[v].key(p))]);
        restricted.push_back(flatten(r));
      }
      int rk = 0;
      if (!restricted.empty() && !restricted[0].empty()) rk = rank(Matrix::from_rows(T.W.A->field(), static_cast<int>(restricted[0].size()), restricted));
      int dB = hom_dim(F[v], F[u], B.gens);
      total_G += dG;
      total_B += dB;
      if (rk != dG || dB != dG) {
        c.ok = false;
        c.detail = "Hom(Q" + label_str(T.labels[v]) + ",Q" + label_str(T.labels[u]) + "): " + std::to_string(dG) + " vs restricted rank " +
                   std::to_string(rk) + " vs End_B " + std::to_string(dB);
        return c;
      }
    }
  c.detail = "dim C_d = " + std::to_string(total_G) + " = dim End_B(F(Q)) = " + std::to_string(total_B);
  return c;
}

FaithfulnessReport faithfulness_report(const Truncation& T) {
  FaithfulnessReport R;
  const int n = static_cast<int>(T.labels.size());
  const int ell = T.d - T.W.N();
  std::vector<Module> delta;
  for (const Label& l : T.labels) delta.push_back(T.image(T.W.standard(l)));
  for (int v = 0; v < n; ++v) {
    Module L = T.W.simple(T.labels[v]);
    int fd = 0;
    for (int i = 0; i <= ell; ++i) fd += L.dim_at(i);
    if (fd) continue;
    R.killed.push_back(T.labels[v]);
    Resolution res = minimal_resolution(T.C, T.simple(v), 2);
    for (int u = 0; u < n; ++u) {
      auto eq = ext_dims(T.C, res, basic_projective(T.C, u), 1);
      auto ed = ext_dims(T.C, res, delta[u], 1);
      std::string tag = "L" + label_str(T.labels[v]) + "," + label_str(T.labels[u]);
      if (ed[0]) {
        R.minus_one_faithful = false;
        R.witnesses.push_back("Hom(" + tag + " Delta) != 0");
      }
      if (eq[0] || eq[1]) {
        R.cover = false;
        R.witnesses.push_back("Ext^{<=1}(" + tag + " Q) != 0");
      }
      if (ed[0] || ed[1]) {
        R.zero_faithful = false;
        R.witnesses.push_back("Ext^{<=1}(" + tag + " Delta) != 0");
      }
    }
  }
  return R;
}

BasicSetsReport basic_sets(const Truncation& T, const BellAlgebra& B) {
  BasicSetsReport R;
  const int n = static_cast<int>(T.labels.size());
  std::vector<Module> D;
  std::vector<int> bidx;
  for (int v = 0; v < n; ++v) {
    Module X = cover_functor(T.W, B, T.W.simple(T.labels[v]));
    if (X.dim()) {
      R.basic.push_back(T.labels[v]);
      bidx.push_back(v);
      D.push_back(std::move(X));
    }
  }
  const int nb = static_cast<int>(D.size());
  for (int a = 0; a < nb; ++a) {
    if (!is_absolutely_simple(D[a])) {
      R.simples_ok = false;
      R.witnesses.push_back("D" + label_str(R.basic[a]) + " not simple");
    }
    for (int b = a + 1; b < nb; ++b)
      if (isomorphic_simple(D[a], D[b], B.gens)) {
        R.simples_ok = false;
        R.witnesses.push_back("D" + label_str(R.basic[a]) + " = D" + label_str(R.basic[b]));
      }
  }
  Subspace rad = annihilator(*B.alg, D);
  if (!nilpotent_ideal(*B.alg, rad)) {
    R.simples_ok = false;
    R.witnesses.push_back("simple list incomplete");
  }
  for (int v = 0; v < n; ++v) {
    Module M = cover_functor(T.W, B, T.W.standard(T.labels[v]));
    std::vector<int> mult(nb, 0);
    int accounted = 0;
    const int total = M.dim();
    while (M.dim()) {
      PieceSpaces Rm = radical_of(M, rad.basis());
      Module top = quotient(M, Rm);
      if (!top.dim()) break;
      for (int a = 0; a < nb; ++a) {
        int m = hom_dim(D[a], top, B.gens);
        mult[a] += m;
        accounted += m * D[a].dim();
      }
      M = submodule(M, Rm);
    }
    if (accounted != total) {
      R.simples_ok = false;
      R.witnesses.push_back("S" + label_str(T.labels[v]) + " not exhausted by the D's");
    }
    R.decomposition.push_back(mult);
    int self = -1;
    for (int a = 0; a < nb; ++a)
      if (bidx[a] == v) self = a;
    if (self < 0) continue;
    if (mult[self] != 1) {
      R.unitriangular = false;
      R.witnesses.push_back("[S:D]" + label_str(T.labels[v]) + " = " + std::to_string(mult[self]));
    }
    int degp = T.labels[v].s;
    bool first = true;
    for (int a = 0; a < nb; ++a) {
      if (!mult[a]) continue;
      int dg = R.basic[a].s;
      if (a != self && !(dg < T.labels[v].s)) {
        R.unitriangular = false;
        R.witnesses.push_back("[S" + label_str(T.labels[v]) + ":D" + label_str(R.basic[a]) + "] != 0 with non-lower label");
      }
      if (first || dg > degp) degp = dg;
      first = false;
    }
    if (degp != T.labels[v].s) {
      R.degrees_match = false;
      R.witnesses.push_back("deg' " + label_str(T.labels[v]) + " = " + std::to_string(degp));
    }
  }
  return R;
}

Check corner_check(const Truncation& Td, const Truncation& Tt) {
  Check c{"corner C_" + std::to_string(Tt.d) + " in C_" + std::to_string(Td.d), true, ""};
  const int shift = Td.d - Tt.d;
  if (shift < 0) return {c.name, false, "t > d"};
  const int nt = static_cast<int>(Tt.labels.size());
  std::vector<int> vmap(nt);
  for (int v = 0; v < nt; ++v) {
    Label l = Tt.labels[v];
    vmap[v] = Td.vertex({l.b, l.s + shift});
    if (vmap[v] < 0) return {c.name, false, "label missing"};
    if (!same_module_up_to_shift(Tt.Q[v], Td.Q[vmap[v]], shift)) return {c.name, false, "Q modules differ for " + label_str(l)};
  }
  // Φ: basis of C_t → C_d by transporting morphisms
  const Field& f = Td.W.A->field();
  std::vector<Vec> phi(Tt.C.dim());
  std::vector<std::vector<int>> by_pair;
  for (int x = 0; x < Tt.C.dim(); ++x) {
    int v = vmap[Tt.C.alg->tgt[x]], u = vmap[Tt.C.alg->src[x]];
    std::vector<int> ids;
    std::vector<Vec> fl;
    for (int y = 0; y < Td.C.dim(); ++y)
      if (Td.C.alg->tgt[y] == v && Td.C.alg->src[y] == u) {
        ids.push_back(y);
        fl.push_back(flatten(Td.morphism(y)));
      }
    Vec target = flatten(Tt.morphism(x));
    Coordinates co(f, static_cast<int>(target.size()), fl);
    auto cx = co.coords(target);
    if (!cx) return {c.name, false, "morphism not in the corner"};
    phi[x] = zero_vec(f, Td.C.dim());
    for (size_t i = 0; i < ids.size(); ++i) phi[x][ids[i]] = (*cx)[i];
  }
  int corner = 0;
  for (int y = 0; y < Td.C.dim(); ++y) {
    bool in_t = false, in_s = false;
    for (int v = 0; v < nt; ++v) {
      in_t = in_t || vmap[v] == Td.C.alg->tgt[y];
      in_s = in_s || vmap[v] == Td.C.alg->src[y];
    }
    if (in_t && in_s) ++corner;
  }
  if (corner != Tt.C.dim() || rank(Matrix::from_rows(f, Td.C.dim(), phi)) != corner)
    return {c.name, false, "dimension " + std::to_string(Tt.C.dim()) + " vs corner " + std::to_string(corner)};
  for (int x = 0; x < Tt.C.dim(); ++x)
    for (int y = 0; y < Tt.C.dim(); ++y) {
      Vec xy = Tt.C.alg->mul_basis(x, y);
      Vec lhs = zero_vec(f, Td.C.dim());
      for (int k = 0; k < Tt.C.dim(); ++k)
        if (!xy[k].is_zero()) axpy(lhs, xy[k], phi[k]);
      if (lhs != Td.C.alg->mul(phi[x], phi[y])) return {c.name, false, "structure constants differ"};
    }
  c.detail = "dim " + std::to_string(corner);
  return c;
}

Check corner_check(const Workspace& W, int d, int t) {
  Truncation Td(W, d), Tt(W, t);
  return corner_check(Td, Tt);
}

SocleTrial socle_support_test(AlgPtr R, int max_k, int trials, std::mt19937_64& rng) {
  SocleTrial out;
  const Field& f = R->field();
  int side = 0;
  for (int k = 0; k < R->dim(); ++k)
    if (R->deg[k]) side = R->deg[k] > 0 ? 1 : -1;
  std::vector<int> gens(R->dim());
  for (int k = 0; k < R->dim(); ++k) gens[k] = k;
  std::vector<Vec> radv;
  for (int k = 0; k < R->dim(); ++k)
    if (R->deg[k]) radv.push_back(R->basis_vec(k));
  Module P = projective_module(R, R->unit, 0);
  std::uniform_int_distribution<int> kd(1, std::max(1, max_k)), gd(1, 3);
  for (int t = 0; t < trials; ++t) {
    int k = kd(rng);
    Module U = P;
    for (int i = 1; i < k; ++i) U = direct_sum(U, P);
    std::vector<std::pair<int, Vec>> seeds;
    int ng = gd(rng);
    std::uniform_int_distribution<int> pd(0, U.npieces() - 1);
    for (int g = 0; g < ng; ++g) {
      int p = pd(rng);
      Vec v;
      for (int j = 0; j < U.piece_dim(p); ++j) v.push_back(f.random(rng, 3));
      seeds.push_back({p, v});
    }
    PieceSpaces M = spin(U, seeds, gens);
    ++out.trials;
    int lo = 0, hi = 0;
    bool any = false;
    for (int p = 0; p < U.npieces(); ++p)
      if (M[p].dim()) {
        if (!any || U.key(p) < lo) lo = U.key(p);
        if (!any || U.key(p) > hi) hi = U.key(p);
        any = true;
      }
    if (!any) {
      // M = 0: the socle of U is its extreme piece
      PieceSpaces S = socle_of(U, radv);
      for (int p = 0; p < U.npieces(); ++p)
        if (S[p].dim() && U.key(p) != (side > 0 ? top_degree(U) : U.key(0))) {
          out.ok = false;
          out.witness = "socle of the free module off its extreme degree";
        }
      continue;
    }
    Module Qm = quotient(U, M);
    PieceSpaces S = socle_of(Qm, radv);
    for (int p = 0; p < Qm.npieces(); ++p) {
      if (!S[p].dim()) continue;
      int key = Qm.key(p);
      bool good = side < 0 ? key <= hi + 1 : key >= lo - 1;
      if (!good) {
        out.ok = false;
        out.witness = "k=" + std::to_string(k) + " socle degree " + std::to_string(key) + " outside the bound from M in [" +
                      std::to_string(lo) + "," + std::to_string(hi) + "]";
      }
    }
  }
  return out;
}

}  // namespace hwc

#include "hwc/graded.hpp"

#include <algorithm>
#include <numeric>

namespace hwc {

std::string label_str(const Label& l) { return "(" + std::to_string(l.b) + "," + std::to_string(l.s) + ")"; }

namespace {

Vec left_basis_mul(const Algebra& B, int k, const Vec& u) {
  Vec r = zero_vec(B.field(), B.dim());
  for (int j = 0; j < B.dim(); ++j) {
    if (u[j].is_zero()) continue;
    for (const auto& [m, c] : B.prod(k, j)) r[m] += u[j] * c;
  }
  return r;
}

}  // namespace

Module standard_from(const Triangular& tri, const std::vector<Matrix>& rho_t, int shift) {
  const Algebra& A = *tri.A;
  const int nb = rho_t.at(0).rows();
  const int nm = static_cast<int>(tri.am.size());
  std::vector<int> order(nm), pos(nm);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return tri.am_deg[a] < tri.am_deg[b]; });
  for (int i = 0; i < nm; ++i) pos[order[i]] = i;
  std::vector<int> keys;
  for (int i = 0; i < nm; ++i)
    for (int v = 0; v < nb; ++v) keys.push_back(tri.am_deg[order[i]] + shift);
  const int d = nm * nb;
  std::vector<Matrix> dense;
  for (int k = 0; k < A.dim(); ++k) {
    Matrix m(A.field(), d, d);
    for (int p = 0; p < nm; ++p)
      for (const auto& st : tri.straighten(k, p)) {
        const Matrix& r = rho_t[st.q];
        for (int v = 0; v < nb; ++v)
          for (int w = 0; w < nb; ++w)
            if (!r(w, v).is_zero()) m(pos[st.p] * nb + w, pos[p] * nb + v) += st.c * r(w, v);
      }
    dense.push_back(std::move(m));
  }
  return Module::from_dense(tri.A, keys, dense);
}

Module projective_module(AlgPtr B, const Vec& e, int shift) {
  std::map<int, Subspace> parts;
  for (int i = 0; i < B->dim(); ++i) {
    Vec v = left_basis_mul(*B, i, e);
    if (is_zero(v)) continue;
    auto it = parts.try_emplace(B->deg[i], B->field(), B->dim()).first;
    it->second.add(v);
  }
  std::vector<int> keys, dims;
  std::vector<const Subspace*> sp;
  for (auto& [d, s] : parts)
    if (s.dim()) {
      keys.push_back(d + shift);
      dims.push_back(s.dim());
      sp.push_back(&s);
    }
  Module P(B, keys, dims);
  std::vector<Coordinates> co;
  for (auto* s : sp) co.emplace_back(B->field(), B->dim(), s->basis());
  for (int k = 0; k < B->dim(); ++k)
    for (int p = 0; p < P.npieces(); ++p) {
      auto t = B->target_key(k, keys[p]);
      int q = t ? P.piece_of(*t) : -1;
      Matrix m(B->field(), q >= 0 ? dims[q] : 0, dims[p]);
      bool nz = false;
      for (int j = 0; j < dims[p]; ++j) {
        Vec w = left_basis_mul(*B, k, sp[p]->basis_vector(j));
        if (is_zero(w)) continue;
        if (q < 0) throw std::logic_error("projective module: product leaves the support");
        m.set_col(j, co[q].coords_or_throw(w));
        nz = true;
      }
      if (nz) P.set_block(k, p, std::move(m));
    }
  return P;
}

Workspace::Workspace(AlgPtr a, const TriangularData& data, uint64_t sd) : A(std::move(a)), seed(sd), rng(sd) {
  auto rep = validate_algebra(*A);
  if (!rep.ok()) throw PreconditionError("algebra: " + rep.witness);
  tri = Triangular::build(A, data);
  Aop = A->opposite();
  tri_op = Triangular::build(Aop, opposite_data(data));
  gens = generating_basis_elements(*A);

  auto dec = decompose_semisimple(regular_module(tri.Talg), generating_basis_elements(*tri.Talg), rng);
  tsimples = dec.simples;
  auto traces = [&](const Module& S) {
    std::vector<mpq_class> t;
    t.push_back(S.dim());
    for (int q = 0; q < tri.Talg->dim(); ++q) {
      Matrix d = S.dense(q);
      Scalar s = A->field().zero();
      for (int i = 0; i < d.rows(); ++i) s += d(i, i);
      t.push_back(s.to_mpq());
    }
    return t;
  };
  std::stable_sort(tsimples.begin(), tsimples.end(), [&](const Module& x, const Module& y) { return traces(x) < traces(y); });
  for (const Vec& z : central_idempotents(*tri.Talg, tsimples)) {
    Vec v = zero_vec(A->field(), A->dim());
    for (size_t q = 0; q < z.size(); ++q) axpy(v, z[q], tri.t[q]);
    tcentral.push_back(std::move(v));
  }

  const int nbk = nblocks();
  for (int b = 0; b < nbk; ++b) {
    std::vector<Matrix> rho;
    for (int q = 0; q < tri.Talg->dim(); ++q) rho.push_back(tsimples[b].dense(q));
    D0_.push_back(standard_from(tri, rho, 0));
    for (auto& m : rho) m = m.transpose();
    N0_.push_back(dual(standard_from(tri_op, rho, 0), A));
  }
  for (int b = 0; b < nbk; ++b) {
    const Module& D = D0_[b];
    int top = D.piece_of(0);
    PieceSpaces nmax;
    for (int p = 0; p < D.npieces(); ++p) {
      Matrix stack(A->field(), 0, D.piece_dim(p));
      for (int k : A->of_degree(-D.key(p))) {
        const auto& bl = D.block(k, p);
        if (bl.to == top) stack = stack.vstack(bl.m);
      }
      nmax.push_back(kernel(stack));
    }
    L0_.push_back(quotient(D, nmax));
    supp_L_.push_back(L0_.back().support());
  }

  // core A₀
  A0_index = A->of_degree(0);
  std::vector<Vec> basis0;
  for (int i : A0_index) basis0.push_back(A->basis_vec(i));
  auto a0 = subalgebra(*A, basis0, std::vector<int>(basis0.size(), 0));
  a0->basic = true;
  a0->ncomp = 1;
  a0->src.assign(a0->dim(), 0);
  a0->tgt.assign(a0->dim(), 0);
  for (size_t i = 0; i < A0_index.size(); ++i) a0->labels[i] = A->label(A0_index[i]);
  A0 = a0;
  for (int s = 0; s <= -N_minus(); ++s)
    for (int b = 0; b < nbk; ++b) {
      const auto& sp = supp_L_[b];
      if (std::find(sp.begin(), sp.end(), -s) != sp.end()) core_labels.push_back({b, s});
    }
  std::sort(core_labels.begin(), core_labels.end());
  for (const Label& l : core_labels) core_simples.push_back(core_part(simple(l), 0));
  rad_A0 = annihilator(*A0, core_simples);
  idem = lift_idempotents(*A0, core_simples);
  for (int b = 0; b < nbk; ++b) {
    int ci = static_cast<int>(std::find(core_labels.begin(), core_labels.end(), Label{b, 0}) - core_labels.begin());
    for (size_t i = 0; i < idem.idem.size(); ++i)
      if (idem.simple_of[i] == ci) {
        eb.push_back(to_A(idem.idem[i]));
        break;
      }
  }
  Subspace Jsp = annihilator(*A, L0_);
  for (auto& [d, vs] : graded_components(*A, Jsp))
    for (auto& v : vs) {
      J.push_back(v);
      Jdeg.push_back(d);
    }

  for (int b = 0; b < nbk; ++b) Lchar_.push_back(tchar(L0_[b]));
  for (int b = 0; b < nbk; ++b) {
    const Module& Nb = N0_[b];
    Module head = quotient(Nb, radical_of(Nb, J));
    nabla_head.push_back(simple_label(head));
    P0_.push_back(projective_module(A, eb[b], 0));
    Module soc = submodule(P0_[b], socle_of(P0_[b], J));
    if (is_simple(soc)) {
      proj_socle.push_back(simple_label(soc));
    } else {
      socles_simple = false;
      proj_socle.push_back({-1, 0});
    }
  }
}

Module Workspace::standard(Label l) const { return D0_.at(l.b).shifted(l.s); }
Module Workspace::costandard(Label l) const { return N0_.at(l.b).shifted(l.s); }
Module Workspace::simple(Label l) const { return L0_.at(l.b).shifted(l.s); }
Module Workspace::projective(Label l) const { return P0_.at(l.b).shifted(l.s); }
Module Workspace::regular() const { return projective_module(A, A->unit, 0); }

Module Workspace::injective(Label l) const {
  Vec e = eb.at(l.b);
  return dual(projective_module(Aop, e, 0), A).shifted(l.s);
}

Module Workspace::tilting(Label l) const { return projective(h_inv(l)); }

Label Workspace::h(Label l) const {
  for (int c = 0; c < nblocks(); ++c)
    if (nabla_head[c].b == l.b) return {c, l.s - nabla_head[c].s};
  throw std::logic_error("h is not a bijection on T-blocks");
}

bool Workspace::self_injective() const {
  if (!socles_simple) return false;
  for (int b = 0; b < nblocks(); ++b)
    for (int c = b + 1; c < nblocks(); ++c)
      if (proj_socle[b].b == proj_socle[c].b) return false;
  return true;
}

Vec Workspace::to_A(const Vec& a0) const {
  Vec v = zero_vec(A->field(), A->dim());
  for (size_t i = 0; i < A0_index.size(); ++i) v[A0_index[i]] = a0[i];
  return v;
}

Vec Workspace::to_A0(const Vec& a) const {
  Vec v;
  for (int i : A0_index) v.push_back(a[i]);
  return v;
}

Workspace::TChar Workspace::tchar(const Module& M) const {
  TChar out;
  for (int p = 0; p < M.npieces(); ++p) {
    std::vector<long long> m(nblocks(), 0);
    for (int b = 0; b < nblocks(); ++b) m[b] = rank(M.block_of(tcentral[b], p, p)) / tdim(b);
    out[M.key(p)] = m;
  }
  return out;
}

std::vector<LaurentPoly> Workspace::multiplicities(const Module& M) const {
  TChar rem = tchar(M);
  std::vector<LaurentPoly> out(nblocks());
  for (auto it = rem.rbegin(); it != rem.rend(); ++it) {
    const int key = it->first;
    for (int b = 0; b < nblocks(); ++b) {
      long long m = rem[key][b];
      if (!m) continue;
      if (m < 0) throw std::logic_error("character peeling produced a negative multiplicity");
      out[b].add_term(key, m);
      for (const auto& [k, v] : Lchar_[b]) {
        auto& slot = rem[key + k];
        if (slot.empty()) slot.assign(nblocks(), 0);
        for (int c = 0; c < nblocks(); ++c) slot[c] -= m * v[c];
      }
    }
  }
  for (const auto& [k, v] : rem)
    for (long long x : v)
      if (x) throw std::logic_error("character peeling left a remainder");
  return out;
}

std::vector<LaurentPoly> Workspace::multiplicities_bruteforce(const Module& M) const {
  std::vector<LaurentPoly> out(nblocks());
  Module U = M;
  while (U.dim()) {
    PieceSpaces R = radical_of(U, J);
    Module layer = quotient(U, R);
    auto sup = layer.support();
    for (int s = sup.front(); s <= sup.back() - N_minus(); ++s)
      for (int b = 0; b < nblocks(); ++b) {
        int m = hom_dim(layer, simple({b, s}), gens);
        if (m) out[b].add_term(s, m);
      }
    U = submodule(U, R);
  }
  return out;
}

Label Workspace::simple_label(const Module& S) const {
  auto sup = S.support();
  if (sup.empty()) throw std::invalid_argument("zero module has no label");
  int top = sup.back();
  auto ch = tchar(S).at(top);
  for (int b = 0; b < nblocks(); ++b)
    if (ch[b]) return {b, top};
  throw std::logic_error("top piece carries no T-character");
}

bool Workspace::is_simple(const Module& M) const {
  if (!M.dim()) return false;
  if (total_dim(radical_of(M, J))) return false;
  long long total = 0;
  for (const auto& p : multiplicities(M)) total += p.at_one();
  return total == 1;
}

}  // namespace hwc

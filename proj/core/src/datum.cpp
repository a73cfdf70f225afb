#include "hwc/datum.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace hwc {

namespace {

Vec flatten(const Morphism& m) {
  Vec v;
  for (const auto& b : m.blocks)
    for (const auto& x : b.data()) v.push_back(x);
  return v;
}

Matrix random_invertible(const Field& f, int n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m(f, n, n);
    for (auto& x : m.data()) x = f.random(rng);
    if (!determinant(m).is_zero()) return m;
  }
}

// basis elements first, then random combinations
template <class Pred>
std::optional<Morphism> pick(const std::vector<Morphism>& basis, Pred ok, std::mt19937_64& rng) {
  for (const auto& m : basis)
    if (ok(m)) return m;
  if (basis.empty()) return std::nullopt;
  const Field& f = basis[0].blocks.empty() ? Field() : basis[0].blocks[0].field();
  for (int t = 0; t < 64; ++t) {
    Vec c(basis.size());
    for (auto& x : c) x = f.random(rng);
    Morphism m = combine(basis, c);
    if (ok(m)) return m;
  }
  return std::nullopt;
}

Vec random_kernel_element(const Field& f, int n, const std::vector<Vec>& ker, std::mt19937_64& rng) {
  Vec v = zero_vec(f, n);
  for (const auto& k : ker) axpy(v, f.random(rng), k);
  return v;
}

// A coordinates of a vector in piece p of the regular module
Vec regular_to_A(const Workspace& W, const Module& R, int p, const Vec& piece) {
  Vec a = zero_vec(W.A->field(), W.A->dim());
  auto idx = W.A->of_degree(R.key(p));
  for (size_t i = 0; i < idx.size(); ++i) a[idx[i]] = piece[i];
  return a;
}

}  // namespace

std::vector<Label> datum_poset_formula(const Workspace& W) {
  std::vector<Label> out;
  std::set<int> plus, minus;
  for (int d : W.tri.ap_deg) plus.insert(d);
  for (int d : W.tri.am_deg) minus.insert(-d);
  for (int s : plus)
    if (minus.count(s))
      for (int b = 0; b < W.nblocks(); ++b) out.push_back({b, s});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Label> datum_poset(const Workspace& W) {
  std::vector<Label> out;
  Module R = W.regular();
  for (int s = 0; s <= W.N(); ++s)
    for (int b = 0; b < W.nblocks(); ++b) {
      Label l{b, s};
      if (W.costandard(l).dim_at(0) && hom_dim(W.standard(l), R, W.gens)) out.push_back(l);
    }
  std::sort(out.begin(), out.end());
  return out;
}

int StandardDatum::size() const {
  int n = 0;
  for (const auto& L : layers) n += L.nF * L.nG;
  return n;
}

std::vector<Vec> StandardDatum::basis() const {
  std::vector<Vec> out;
  for (const auto& L : layers)
    for (const auto& row : L.b)
      for (const auto& x : row) out.push_back(x);
  return out;
}

std::vector<int> StandardDatum::layer_of() const {
  std::vector<int> out;
  for (size_t l = 0; l < layers.size(); ++l) out.insert(out.end(), layers[l].nF * layers[l].nG, static_cast<int>(l));
  return out;
}

Vec e_product(const Workspace& W, const Vec& x, const Vec& y) { return W.A0->mul(y, x); }

StandardDatum standard_datum(const Workspace& W, const DatumOptions& opt) {
  if (!W.self_injective()) throw PreconditionError("A is not self-injective: projective socles are not simple and distinct");
  std::mt19937_64 rng(opt.seed);
  const Field& f = W.A->field();
  Module R = W.regular();
  const int r0 = R.piece_of(0);
  StandardDatum S;
  for (const Label& lam : datum_poset(W)) {
    StandardDatum::Layer Ly;
    Ly.lam = lam;
    Ly.T = W.tilting(lam);
    Ly.D = W.standard(lam);
    Ly.Nb = W.costandard(lam);
    const Module &T = Ly.T, &D = Ly.D, &Nb = Ly.Nb;
    auto HTN = hom(T, Nb, W.gens);
    auto pi = pick(HTN, [&](const Morphism& m) { return rank(to_dense(T, Nb, m)) == Nb.dim(); }, rng);
    if (!pi) throw PreconditionError("no surjection T(" + label_str(lam) + ") -> costandard module");
    Ly.pi = *pi;
    auto HDT = hom(D, T, W.gens);
    auto iota = pick(HDT, [&](const Morphism& m) {
      return rank(to_dense(D, T, m)) == D.dim() && !is_zero(compose(D, T, Nb, Ly.pi, m));
    }, rng);
    if (!iota) throw PreconditionError("no embedding of the standard module into T(" + label_str(lam) + ")");
    Ly.iota = *iota;

    const int q0 = Nb.piece_of(0), t0 = T.piece_of(0);
    if (q0 < 0 || t0 < 0) throw std::logic_error("poset label without degree-0 part");
    Ly.nF = Nb.piece_dim(q0);
    Matrix V = Matrix::identity(f, Ly.nF);
    if (opt.randomize) V = random_invertible(f, Ly.nF, rng);
    const Matrix& P0 = Ly.pi.blocks[t0];
    std::vector<Vec> kerP;
    for (const auto& k : kernel(P0).basis()) kerP.push_back(k);
    for (int j = 0; j < Ly.nF; ++j) {
      Ly.v.push_back(V.col(j));
      auto w = solve(P0, Ly.v.back());
      if (!w) throw PreconditionError("lift system for f̂ is inconsistent at " + label_str(lam));
      if (opt.randomize) *w = add(*w, random_kernel_element(f, T.piece_dim(t0), kerP, rng));
      Ly.w.push_back(*w);
    }

    auto HDA = hom(D, R, W.gens);
    Ly.nG = static_cast<int>(HDA.size());
    if (opt.randomize && Ly.nG) {
      Matrix M = random_invertible(f, Ly.nG, rng);
      std::vector<Morphism> mixed;
      for (int i = 0; i < Ly.nG; ++i) mixed.push_back(combine(HDA, M.col(i)));
      HDA = std::move(mixed);
    }
    Ly.g = HDA;
    auto HTA = hom(T, R, W.gens);
    std::vector<Vec> cols;
    for (const auto& h : HTA) cols.push_back(flatten(compose(D, T, R, h, Ly.iota)));
    const int rows = static_cast<int>(flatten(zero_morphism(D, R)).size());
    Matrix sys = Matrix::from_cols(f, rows, cols);
    if (cols.empty()) sys = Matrix(f, rows, 0);
    std::vector<Vec> kerS;
    for (const auto& k : kernel(sys).basis()) kerS.push_back(k);
    for (const auto& g : Ly.g) {
      auto c = HTA.empty() ? std::optional<Vec>() : solve(sys, flatten(g));
      if (!c) throw PreconditionError("lift system for ĝ is inconsistent at " + label_str(lam));
      if (opt.randomize) *c = add(*c, random_kernel_element(f, static_cast<int>(HTA.size()), kerS, rng));
      Ly.ghat.push_back(combine(HTA, *c));
    }
    Ly.b.assign(Ly.nG, {});
    for (int i = 0; i < Ly.nG; ++i)
      for (int j = 0; j < Ly.nF; ++j) {
        Vec img = apply(T, R, Ly.ghat[i], T.embed(Ly.w[j], t0));
        Ly.b[i].push_back(R.piece_part(img, r0));
      }
    if (Ly.nF && Ly.nG) S.layers.push_back(std::move(Ly));
  }
  return S;
}

Check verify_standard_datum(const Workspace& W, const StandardDatum& S) {
  Check c{"standard datum", true, ""};
  const Field& f = W.A0->field();
  const int n = W.A0->dim();
  auto B = S.basis();
  auto layer = S.layer_of();
  if (static_cast<int>(B.size()) != n || rank(Matrix::from_rows(f, n, B)) != n) {
    c.ok = false;
    c.detail = "datum has " + std::to_string(B.size()) + " independent-candidate elements, dim A0 = " + std::to_string(n);
    return c;
  }
  Coordinates co(f, n, B);
  std::vector<int> offs;
  int o = 0;
  for (const auto& L : S.layers) {
    offs.push_back(o);
    o += L.nF * L.nG;
  }
  auto fail = [&](const std::string& s) {
    if (c.ok) {
      c.ok = false;
      c.detail = s;
    }
  };
  for (size_t l = 0; l < S.layers.size() && c.ok; ++l) {
    const auto& L = S.layers[l];
    auto at = [&](int i, int j) { return offs[l] + i * L.nF + j; };
    for (int k = 0; k < n && c.ok; ++k) {
      Vec bk = W.A0->basis_vec(k);
      // b ∗ b_ij: only i moves, coefficients independent of j
      std::vector<Vec> ref;
      for (int j = 0; j < L.nF && c.ok; ++j)
        for (int i = 0; i < L.nG && c.ok; ++i) {
          Vec x = co.coords_or_throw(e_product(W, bk, L.b[i][j]));
          for (int m = 0; m < n; ++m) {
            if (x[m].is_zero() || layer[m] < static_cast<int>(l)) continue;
            int mi = (m - offs[l]) / L.nF, mj = (m - offs[l]) % L.nF;
            if (layer[m] != static_cast<int>(l) || mj != j) {
              std::ostringstream os;
              os << "left product " << W.A0->label(k) << " * b" << label_str(L.lam) << "[" << i << "," << j << "] has a term outside the fibre";
              fail(os.str());
              break;
            }
            (void)mi;
          }
          Vec col;
          for (int i2 = 0; i2 < L.nG; ++i2) col.push_back(x[at(i2, j)]);
          if (j == 0) ref.push_back(col);
          else if (col != ref[i]) {
            std::ostringstream os;
            os << "left coefficients of " << W.A0->label(k) << " on layer " << label_str(L.lam) << " depend on j=" << j;
            fail(os.str());
          }
        }
      ref.clear();
      for (int i = 0; i < L.nG && c.ok; ++i)
        for (int j = 0; j < L.nF && c.ok; ++j) {
          Vec x = co.coords_or_throw(e_product(W, L.b[i][j], bk));
          for (int m = 0; m < n; ++m) {
            if (x[m].is_zero() || layer[m] < static_cast<int>(l)) continue;
            int mi = (m - offs[l]) / L.nF;
            if (layer[m] != static_cast<int>(l) || mi != i) {
              std::ostringstream os;
              os << "right product b" << label_str(L.lam) << "[" << i << "," << j << "] * " << W.A0->label(k) << " has a term outside the fibre";
              fail(os.str());
              break;
            }
          }
          Vec row;
          for (int j2 = 0; j2 < L.nF; ++j2) row.push_back(x[at(i, j2)]);
          if (i == 0) ref.push_back(row);
          else if (row != ref[j]) {
            std::ostringstream os;
            os << "right coefficients of " << W.A0->label(k) << " on layer " << label_str(L.lam) << " depend on i=" << i;
            fail(os.str());
          }
        }
    }
  }
  if (c.ok) c.detail = std::to_string(n) + " basis elements over " + std::to_string(S.layers.size()) + " labels";
  return c;
}

bool same_filtration(const StandardDatum& a, const StandardDatum& b) {
  if (a.layers.size() != b.layers.size()) return false;
  if (a.layers.empty()) return true;
  const Field& f = a.layers[0].T.field();
  const int n = static_cast<int>(a.layers[0].b[0][0].size());
  Subspace sa(f, n), sb(f, n);
  for (size_t l = 0; l < a.layers.size(); ++l) {
    if (a.layers[l].lam != b.layers[l].lam) return false;
    for (const auto& r : a.layers[l].b)
      for (const auto& x : r) sa.add(x);
    for (const auto& r : b.layers[l].b)
      for (const auto& x : r) sb.add(x);
    if (!(sa == sb)) return false;
  }
  return true;
}

Matrix core_tau(const Workspace& W, const Matrix& tau) {
  const int n = W.A0->dim();
  Matrix t(W.A0->field(), n, n);
  for (int k = 0; k < n; ++k) t.set_col(k, W.to_A0(tau.col(W.A0_index[k])));
  return t;
}

CellDatumResult cell_datum(const Workspace& W, const Matrix& tau, uint64_t seed) {
  CellDatumResult out;
  out.checks = check_anti_involution(*W.A, tau, &W.tri.data);
  for (const auto& c : out.checks)
    if (!c.ok) {
      out.error = "τ is not a triangular anti-involution: " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
      return out;
    }
  std::mt19937_64 rng(seed);
  out.datum = standard_datum(W, {});
  const Field& f = W.A->field();
  Module R = W.regular();
  const int r0 = R.piece_of(0);
  const int n0 = W.A0->dim();
  Matrix t0 = core_tau(W, tau);
  for (auto& Ly : out.datum.layers) {
    if (Ly.nF != Ly.nG) {
      out.error = "|F| != |G| at " + label_str(Ly.lam);
      return out;
    }
    const int n = Ly.nF;
    const Module& T = Ly.T;
    const int tp = T.piece_of(0);
    auto HTA = hom(T, R, W.gens);
    const int m = static_cast<int>(HTA.size());
    // hw[k][j] = h_k(w_j) in A₀ coordinates
    std::vector<std::vector<Vec>> hw(m), thw(m);
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < n; ++j) {
        hw[k].push_back(R.piece_part(apply(T, R, HTA[k], T.embed(Ly.w[j], tp)), r0));
        thw[k].push_back(t0 * hw[k].back());
      }
    // unknowns c[i][k]: Σ_k c[i][k] h_k(w_j) = τ(Σ_k c[j][k] h_k(w_i))
    Echelon eq(f, n * m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int r = 0; r < n0; ++r) {
          Vec row = zero_vec(f, n * m);
          for (int k = 0; k < m; ++k) {
            row[i * m + k] += hw[k][j][r];
            row[j * m + k] -= thw[k][i][r];
          }
          if (!is_zero(row)) eq.add(std::move(row));
        }
    auto ker = eq.kernel();
    bool found = false;
    for (int t = 0; t < 64 && !found; ++t) {
      Vec c = zero_vec(f, n * m);
      if (t == 0 && ker.size() == 1) c = ker[0];
      else
        for (const auto& k : ker) axpy(c, f.random(rng), k);
      std::vector<Morphism> gh;
      std::vector<Vec> gi;
      for (int i = 0; i < n; ++i) {
        gh.push_back(combine(HTA, Vec(c.begin() + i * m, c.begin() + (i + 1) * m)));
        gi.push_back(flatten(compose(Ly.D, T, R, gh.back(), Ly.iota)));
      }
      if (gi.empty() || rank(Matrix::from_rows(f, static_cast<int>(gi[0].size()), gi)) != n) continue;
      found = true;
      Ly.ghat = gh;
      Ly.g.clear();
      for (auto& g : gh) Ly.g.push_back(compose(Ly.D, T, R, g, Ly.iota));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Ly.b[i][j] = R.piece_part(apply(T, R, gh[i], T.embed(Ly.w[j], tp)), r0);
    }
    if (!found) {
      out.error = "no τ-symmetric lifts at " + label_str(Ly.lam);
      return out;
    }
  }
  Check sd = verify_standard_datum(W, out.datum);
  out.checks.push_back(sd);
  Check inv{"(b_ij)* = b_ji", true, ""};
  for (const auto& Ly : out.datum.layers)
    for (int i = 0; i < Ly.nF; ++i)
      for (int j = 0; j < Ly.nF; ++j)
        if (t0 * Ly.b[i][j] != Ly.b[j][i]) {
          inv.ok = false;
          inv.detail = "fails at " + label_str(Ly.lam);
        }
  out.checks.push_back(inv);
  out.ok = sd.ok && inv.ok;
  if (!out.ok) out.error = !sd.ok ? sd.detail : inv.detail;
  return out;
}

std::vector<CellModule> cell_modules(const Workspace& W, const StandardDatum& S) {
  std::vector<CellModule> out;
  const Field& f = W.A->field();
  Module R = W.regular();
  const int n0 = W.A0->dim();
  auto B = S.basis();
  Coordinates co(f, n0, B);
  std::vector<int> a0gens(n0);
  std::iota(a0gens.begin(), a0gens.end(), 0);
  int off = 0;
  for (const auto& L : S.layers) {
    CellModule cm;
    cm.lam = L.lam;
    cm.dim_delta0 = L.nF;
    cm.dim_nabla0 = L.nG;
    cm.dim_Delta_deg0 = L.D.dim_at(0);
    const int s = L.lam.s;
    const int ps = L.D.piece_of(s), qs = L.Nb.piece_of(s), q0 = L.Nb.piece_of(0);
    const int rs = R.piece_of(s);
    // generator u of the top with π∘ι(u) ≠ 0
    Morphism c = compose(L.D, L.T, L.Nb, L.pi, L.iota);
    Vec u, ref;
    for (int a = 0; a < L.D.piece_dim(ps) && u.empty(); ++a) {
      Vec cand = L.D.embed(unit_vec(f, L.D.piece_dim(ps), a), ps);
      Vec r = L.Nb.piece_part(apply(L.D, L.Nb, c, cand), qs);
      if (!is_zero(r)) {
        u = cand;
        ref = r;
      }
    }
    int piv = 0;
    while (ref[piv].is_zero()) ++piv;
    cm.beta = Matrix(f, L.nF, L.nG);
    for (int k = 0; k < L.nG; ++k) {
      Vec gu = R.piece_part(apply(L.D, R, L.g[k], u), rs);
      Vec a = regular_to_A(W, R, rs, gu);
      for (int j = 0; j < L.nF; ++j) {
        Vec x = L.Nb.piece_part(L.Nb.apply(a, L.Nb.embed(L.v[j], q0)), qs);
        Scalar beta = x[piv] / ref[piv];
        if (x != scale(beta, ref)) throw std::logic_error("f∘g is not a multiple of the canonical map");
        cm.beta(j, k) = beta;
      }
    }
    cm.beta_structure = Matrix(f, L.nF, L.nG);
    for (int j = 0; j < L.nF; ++j)
      for (int k = 0; k < L.nG; ++k) {
        Vec x = co.coords_or_throw(e_product(W, L.b[0][j], L.b[k][0]));
        cm.beta_structure(j, k) = x[off];
      }
    cm.rank = rank(cm.beta);
    cm.underlined = cm.rank > 0;
    cm.head = W.h_inv(L.lam);
    cm.tilting_mult = W.simple(cm.head).dim_at(0);
    if (cm.underlined) {
      Module N0 = W.core_part(L.Nb, 0);
      Matrix V = Matrix::from_cols(f, N0.dim(), L.v);
      std::vector<Vec> radv;
      for (const auto& a : kernel(cm.beta.transpose()).basis()) radv.push_back(V * a);
      PieceSpaces rad{Subspace::span(f, N0.dim(), radv)};
      Module L0 = quotient(N0, rad);
      Module target = W.core_part(W.simple(cm.head), 0);
      cm.head_iso = L0.dim() == target.dim() && isomorphic_simple(L0, target, a0gens);
    }
    out.push_back(std::move(cm));
    off += L.nF * L.nG;
  }
  return out;
}

}  // namespace hwc

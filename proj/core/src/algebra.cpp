#include "hwc/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hwc/radical.hpp"

namespace hwc {

Algebra::Algebra(const Field& f, int n)
    : deg(n, 0), unit(zero_vec(f, n)), f_(f), n_(n), table_(static_cast<size_t>(n) * n) {}

void Algebra::set_prod(int i, int j, std::vector<Term> t) {
  std::erase_if(t, [](const Term& x) { return x.c.is_zero(); });
  table_[static_cast<size_t>(i) * n_ + j] = std::move(t);
}

void Algebra::add_prod(int i, int j, int k, const Scalar& c) {
  auto& t = table_[static_cast<size_t>(i) * n_ + j];
  for (auto it = t.begin(); it != t.end(); ++it)
    if (it->k == k) {
      it->c += c;
      if (it->c.is_zero()) t.erase(it);
      return;
    }
  if (!c.is_zero()) t.push_back({k, c});
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
  Vec r = zero_vec(f_, n_);
  for (int i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (b[j].is_zero()) continue;
      const auto& t = prod(i, j);
      if (t.empty()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& [k, c] : t) r[k] += ab * c;
    }
  }
  return r;
}

Vec Algebra::mul_basis(int i, int j) const {
  Vec r = zero_vec(f_, n_);
  for (const auto& [k, c] : prod(i, j)) r[k] += c;
  return r;
}

Matrix Algebra::left_mult(const Vec& a) const {
  Matrix m(f_, n_, n_);
  for (int i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j)
      for (const auto& [k, c] : prod(i, j)) m(k, j) += a[i] * c;
  }
  return m;
}

Matrix Algebra::right_mult(const Vec& a) const {
  Matrix m(f_, n_, n_);
  for (int j = 0; j < n_; ++j) {
    if (a[j].is_zero()) continue;
    for (int i = 0; i < n_; ++i)
      for (const auto& [k, c] : prod(i, j)) m(k, i) += a[j] * c;
  }
  return m;
}

std::optional<int> Algebra::target_key(int k, int key) const {
  if (basic) {
    if (src[k] != key) return std::nullopt;
    return tgt[k];
  }
  return key + deg[k];
}

std::vector<int> Algebra::of_degree(int d) const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (deg[i] == d) out.push_back(i);
  return out;
}

int Algebra::min_deg() const { return n_ ? *std::min_element(deg.begin(), deg.end()) : 0; }
int Algebra::max_deg() const { return n_ ? *std::max_element(deg.begin(), deg.end()) : 0; }

bool Algebra::is_graded_trivially() const {
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0; });
}

std::shared_ptr<Algebra> Algebra::opposite() const {
  auto op = std::make_shared<Algebra>(f_, n_);
  op->labels = labels;
  op->basic = basic;
  op->ncomp = ncomp;
  op->unit = unit;
  for (int i = 0; i < n_; ++i) op->deg[i] = -deg[i];
  op->src = tgt;
  op->tgt = src;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) op->table_[static_cast<size_t>(i) * n_ + j] = prod(j, i);
  return op;
}

namespace {

using Sparse = std::map<int, Scalar>;

void acc(Sparse& s, int k, const Scalar& c) {
  auto [it, fresh] = s.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
  }
}

std::string triple(const Algebra& A, int i, int j, int k) {
  return "(" + A.label(i) + ", " + A.label(j) + ", " + A.label(k) + ")";
}

}  // namespace

AlgebraReport validate_algebra(const Algebra& A) {
  AlgebraReport rep;
  const int n = A.dim();
  if (static_cast<int>(A.unit.size()) != n) {
    rep.unital = false;
    rep.witness = "unit vector has wrong length";
    return rep;
  }
  for (int i = 0; i < n && rep.unital; ++i) {
    Vec e = A.basis_vec(i);
    if (A.mul(A.unit, e) != e || A.mul(e, A.unit) != e) {
      rep.unital = false;
      rep.witness = "unit fails on " + A.label(i);
    }
  }
  for (int i = 0; i < n && rep.graded; ++i)
    for (int j = 0; j < n && rep.graded; ++j)
      for (const auto& [k, c] : A.prod(i, j)) {
        bool ok = A.basic ? (A.src[i] == A.tgt[j] && A.tgt[k] == A.tgt[i] && A.src[k] == A.src[j])
                          : (A.deg[k] == A.deg[i] + A.deg[j]);
        if (!ok) {
          rep.graded = false;
          rep.witness = "product " + A.label(i) + "*" + A.label(j) + " leaves its graded piece at " + A.label(k);
          break;
        }
      }
  for (int k = 0; k < n && rep.graded; ++k)
    if (!A.unit[k].is_zero() && (A.basic ? A.src[k] != A.tgt[k] : A.deg[k] != 0)) {
      rep.graded = false;
      rep.witness = "unit is not homogeneous of degree 0";
    }
  for (int i = 0; i < n && rep.associative; ++i)
    for (int j = 0; j < n && rep.associative; ++j) {
      if (A.basic && A.src[i] != A.tgt[j]) continue;
      for (int k = 0; k < n; ++k) {
        if (A.basic && A.src[j] != A.tgt[k]) continue;
        Sparse l, r;
        for (const auto& [m, c] : A.prod(i, j))
          for (const auto& [q, d] : A.prod(m, k)) acc(l, q, c * d);
        for (const auto& [m, c] : A.prod(j, k))
          for (const auto& [q, d] : A.prod(i, m)) acc(r, q, c * d);
        if (l != r) {
          rep.associative = false;
          rep.witness = "associativity fails on " + triple(A, i, j, k);
          break;
        }
      }
    }
  return rep;
}

std::shared_ptr<Algebra> subalgebra(const Algebra& A, const std::vector<Vec>& basis, const std::vector<int>& degs) {
  const int m = static_cast<int>(basis.size());
  Coordinates co(A.field(), A.dim(), basis);
  auto B = std::make_shared<Algebra>(A.field(), m);
  B->deg = degs;
  for (int i = 0; i < m; ++i) B->labels.push_back("b" + std::to_string(i));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto c = co.coords(A.mul(basis[i], basis[j]));
      if (!c) throw PreconditionError("subspace is not closed under multiplication");
      std::vector<Term> t;
      for (int k = 0; k < m; ++k)
        if (!(*c)[k].is_zero()) t.push_back({k, (*c)[k]});
      B->set_prod(i, j, std::move(t));
    }
  auto u = co.coords(A.unit);
  if (!u) throw PreconditionError("subspace does not contain the unit");
  B->unit = *u;
  return B;
}

std::vector<std::pair<int, std::vector<Vec>>> graded_components(const Algebra& A, const Subspace& S) {
  std::set<int> degs(A.deg.begin(), A.deg.end());
  std::vector<std::pair<int, std::vector<Vec>>> out;
  const int s = S.dim();
  if (!s) return out;
  for (int d : degs) {
    std::vector<int> outside;
    for (int k = 0; k < A.dim(); ++k)
      if (A.deg[k] != d) outside.push_back(k);
    Matrix m(A.field(), static_cast<int>(outside.size()), s);
    for (size_t r = 0; r < outside.size(); ++r)
      for (int i = 0; i < s; ++i) m(static_cast<int>(r), i) = S.basis_vector(i)[outside[r]];
    Matrix ker = kernel_basis(m);
    if (!ker.rows()) continue;
    std::vector<Vec> vecs;
    for (int t = 0; t < ker.rows(); ++t) {
      Vec x = zero_vec(A.field(), A.dim());
      for (int i = 0; i < s; ++i) axpy(x, ker(t, i), S.basis_vector(i));
      vecs.push_back(std::move(x));
    }
    Subspace sp = Subspace::span(A.field(), A.dim(), vecs);
    out.emplace_back(d, sp.basis());
  }
  return out;
}

bool is_graded_subspace(const Algebra& A, const Subspace& S) {
  int total = 0;
  for (auto& [d, v] : graded_components(A, S)) total += static_cast<int>(v.size());
  return total == S.dim();
}

Subspace generated_subalgebra(const Algebra& A, const std::vector<Vec>& gens) {
  Subspace S(A.field(), A.dim());
  std::vector<Vec> queue{A.unit};
  S.add(A.unit);
  std::vector<Matrix> L;
  for (const auto& g : gens) L.push_back(A.left_mult(g));
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    for (const auto& m : L) {
      Vec w = m * v;
      if (S.add(w)) queue.push_back(std::move(w));
    }
  }
  return S;
}

std::vector<int> generating_basis_elements(const Algebra& A) {
  std::vector<int> order(A.dim());
  for (int i = 0; i < A.dim(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (A.basic) return (A.src[a] != A.tgt[a]) < (A.src[b] != A.tgt[b]);
    return std::abs(A.deg[a]) < std::abs(A.deg[b]);
  });
  std::vector<int> gens;
  std::vector<Vec> gv;
  Subspace S = generated_subalgebra(A, gv);
  for (int k : order) {
    if (S.dim() == A.dim()) break;
    Vec e = A.basis_vec(k);
    if (S.contains(e)) continue;
    gens.push_back(k);
    gv.push_back(e);
    S = generated_subalgebra(A, gv);
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

Triangular Triangular::build(AlgPtr A, const TriangularData& data) {
  auto checks = validate_triangular(*A, data);
  for (const auto& c : checks)
    if (!c.ok) throw PreconditionError("triangular decomposition: " + c.name + ": " + c.detail);
  Triangular tri;
  tri.A = A;
  tri.data = data;
  const Field& f = A->field();
  tri.am.push_back(A->unit);
  tri.am_deg.push_back(0);
  auto cm = graded_components(*A, data.aminus);
  std::sort(cm.begin(), cm.end(), [](auto& a, auto& b) { return a.first > b.first; });
  for (auto& [d, vs] : cm)
    if (d != 0)
      for (auto& v : vs) {
        tri.am.push_back(v);
        tri.am_deg.push_back(d);
      }
  tri.ap.push_back(A->unit);
  tri.ap_deg.push_back(0);
  for (auto& [d, vs] : graded_components(*A, data.aplus))
    if (d != 0)
      for (auto& v : vs) {
        tri.ap.push_back(v);
        tri.ap_deg.push_back(d);
      }
  tri.t = data.tpart.basis();
  const int n = A->dim();
  std::vector<Vec> cols;
  for (size_t p = 0; p < tri.am.size(); ++p)
    for (size_t q = 0; q < tri.t.size(); ++q) {
      Vec pq = A->mul(tri.am[p], tri.t[q]);
      for (size_t r = 0; r < tri.ap.size(); ++r) cols.push_back(A->mul(pq, tri.ap[r]));
    }
  auto inv = inverse(Matrix::from_cols(f, n, cols));
  if (!inv) throw PreconditionError("triangular decomposition: multiplication map is not bijective");
  tri.pbw_inv = *inv;
  tri.Talg = subalgebra(*A, tri.t, std::vector<int>(tri.t.size(), 0));
  tri.Aminus = subalgebra(*A, tri.am, tri.am_deg);
  tri.Aplus = subalgebra(*A, tri.ap, tri.ap_deg);
  const int nm = static_cast<int>(tri.am.size());
  tri.table_.resize(static_cast<size_t>(n) * nm);
  for (int k = 0; k < n; ++k)
    for (int p = 0; p < nm; ++p) {
      Vec x = A->mul(A->basis_vec(k), tri.am[p]);
      Vec c = tri.pbw_inv * x;
      auto& out = tri.table_[static_cast<size_t>(k) * nm + p];
      for (int pp = 0; pp < nm; ++pp)
        for (int q = 0; q < static_cast<int>(tri.t.size()); ++q) {
          const Scalar& v = c[tri.pbw_index(pp, q, 0)];
          if (!v.is_zero()) out.push_back({pp, q, v});
        }
    }
  return tri;
}

int Triangular::N() const { return *std::max_element(ap_deg.begin(), ap_deg.end()); }
int Triangular::N_minus() const { return *std::min_element(am_deg.begin(), am_deg.end()); }

namespace {

Subspace product_span(const Algebra& A, const Subspace& X, const Subspace& Y) {
  std::vector<Vec> v;
  for (const auto& x : X.basis())
    for (const auto& y : Y.basis()) v.push_back(A.mul(x, y));
  return Subspace::span(A.field(), A.dim(), v);
}

Check closed_check(const Algebra& A, const Subspace& S, const std::string& name) {
  Check c{name + " is a subalgebra", true, ""};
  if (!S.contains(A.unit)) {
    c.ok = false;
    c.detail = "does not contain 1";
    return c;
  }
  for (const auto& x : S.basis())
    for (const auto& y : S.basis())
      if (!S.contains(A.mul(x, y))) {
        c.ok = false;
        c.detail = "not closed under multiplication";
        return c;
      }
  return c;
}

}  // namespace

std::vector<Check> validate_triangular(const Algebra& A, const TriangularData& d) {
  std::vector<Check> out;
  const Subspace* parts[3] = {&d.aminus, &d.tpart, &d.aplus};
  const char* names[3] = {"A-", "T", "A+"};
  bool shapes = true;
  for (int i = 0; i < 3; ++i)
    if (parts[i]->ambient() != A.dim()) shapes = false;
  if (!shapes) {
    out.push_back({"spans", false, "subspace has the wrong ambient dimension"});
    return out;
  }
  for (int i = 0; i < 3; ++i) out.push_back(closed_check(A, *parts[i], names[i]));
  for (int i = 0; i < 3; ++i) {
    Check c{std::string(names[i]) + " is graded", is_graded_subspace(A, *parts[i]), ""};
    if (!c.ok) c.detail = "not spanned by homogeneous vectors";
    out.push_back(c);
  }
  bool all_ok = std::all_of(out.begin(), out.end(), [](const Check& c) { return c.ok; });
  if (!all_ok) return out;
  Check supp{"support", true, ""};
  for (auto& [deg, v] : graded_components(A, d.aminus))
    if (deg > 0) supp = {"support", false, "A- has positive degree " + std::to_string(deg)};
  for (auto& [deg, v] : graded_components(A, d.aplus))
    if (deg < 0) supp = {"support", false, "A+ has negative degree " + std::to_string(deg)};
  for (auto& [deg, v] : graded_components(A, d.tpart))
    if (deg != 0) supp = {"support", false, "T is not concentrated in degree 0"};
  out.push_back(supp);
  Check conn{"A-_0 = A+_0 = K", true, ""};
  for (auto* S : {&d.aminus, &d.aplus})
    for (auto& [deg, v] : graded_components(A, *S))
      if (deg == 0 && v.size() != 1) conn = {"A-_0 = A+_0 = K", false, "degree-0 part has dimension " + std::to_string(v.size())};
  out.push_back(conn);
  Check pbw{"multiplication A- (x) T (x) A+ -> A bijective", true, ""};
  if (d.aminus.dim() * d.tpart.dim() * d.aplus.dim() != A.dim()) {
    pbw.ok = false;
    pbw.detail = "dimensions do not multiply to dim A";
  } else {
    Subspace img = product_span(A, product_span(A, d.aminus, d.tpart), d.aplus);
    if (img.dim() != A.dim()) {
      pbw.ok = false;
      pbw.detail = "image has dimension " + std::to_string(img.dim());
    }
  }
  out.push_back(pbw);
  Check norm{"A+T = TA+ and A-T = TA-", true, ""};
  if (!(product_span(A, d.aplus, d.tpart) == product_span(A, d.tpart, d.aplus))) norm = {norm.name, false, "A+T != TA+"};
  if (!(product_span(A, d.aminus, d.tpart) == product_span(A, d.tpart, d.aminus))) norm = {norm.name, false, "A-T != TA-"};
  out.push_back(norm);
  auto Talg = subalgebra(A, d.tpart.basis(), std::vector<int>(d.tpart.dim(), 0));
  out.push_back(check_split_semisimple(Talg));
  return out;
}

TriangularData opposite_data(const TriangularData& d) { return {d.aplus, d.tpart, d.aminus}; }

bool check_ambidextrous(const Triangular& tri) {
  const Algebra& A = *tri.A;
  Subspace S(A.field(), A.dim());
  for (const auto& a : tri.ap)
    for (const auto& t : tri.t) {
      Vec at = A.mul(a, t);
      for (const auto& b : tri.am) S.add(A.mul(at, b));
    }
  return S.dim() == A.dim();
}

bool check_well_generated(const Triangular& tri) {
  const Algebra& A = *tri.A;
  for (int side : {1, -1}) {
    const auto& basis = side > 0 ? tri.ap : tri.am;
    const auto& degs = side > 0 ? tri.ap_deg : tri.am_deg;
    std::vector<Vec> gens;
    for (size_t i = 0; i < basis.size(); ++i)
      if (degs[i] == side) gens.push_back(basis[i]);
    if (generated_subalgebra(A, gens).dim() != static_cast<int>(basis.size())) return false;
  }
  return true;
}

bool socle_is_top(const Triangular& tri, int side) {
  const Algebra& B = side > 0 ? *tri.Aplus : *tri.Aminus;
  const int n = B.dim();
  const int top = side > 0 ? tri.N() : tri.N_minus();
  // socle of the regular module: kernel of left multiplication by the radical
  std::vector<int> rad;
  for (int k = 0; k < n; ++k)
    if (B.deg[k] != 0) rad.push_back(k);
  Matrix stack(B.field(), 0, n);
  for (int r : rad) stack = stack.vstack(B.left_mult(B.basis_vec(r)));
  Subspace soc = kernel(stack);
  std::vector<Vec> topv;
  for (int k = 0; k < n; ++k)
    if (B.deg[k] == top) topv.push_back(B.basis_vec(k));
  return soc == Subspace::span(B.field(), n, topv);
}

bool is_graded_symmetric_form(const Algebra& A, const Vec& phi) {
  const int n = A.dim();
  for (int k = 0; k < n; ++k)
    if (A.deg[k] != 0 && !phi[k].is_zero()) return false;
  Matrix G(A.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : A.prod(i, j)) G(i, j) += c * phi[k];
  if (G != G.transpose()) return false;
  return rank(G) == n;
}

std::optional<Vec> find_graded_symmetric_form(const Algebra& A, std::mt19937_64& rng) {
  const int n = A.dim();
  const Field& f = A.field();
  Echelon eq(f, n);
  for (int k = 0; k < n; ++k)
    if (A.deg[k] != 0) eq.add(unit_vec(f, n, k));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec row = zero_vec(f, n);
      for (const auto& [k, c] : A.prod(i, j)) row[k] += c;
      for (const auto& [k, c] : A.prod(j, i)) row[k] -= c;
      if (!is_zero(row)) eq.add(std::move(row));
    }
  auto sols = eq.kernel();
  for (const auto& s : sols)
    if (is_graded_symmetric_form(A, s)) return s;
  if (sols.size() > 1)
    for (int trial = 0; trial < 16; ++trial) {
      Vec x = zero_vec(f, n);
      for (const auto& s : sols) axpy(x, f.random(rng, 7), s);
      if (is_graded_symmetric_form(A, x)) return x;
    }
  return std::nullopt;
}

std::vector<Check> check_anti_involution(const Algebra& A, const Matrix& tau, const TriangularData* tri) {
  const int n = A.dim();
  std::vector<Check> out;
  out.push_back({"tau is an involution", tau * tau == Matrix::identity(A.field(), n), ""});
  Check anti{"tau reverses products", true, ""};
  for (int i = 0; i < n && anti.ok; ++i)
    for (int j = 0; j < n; ++j) {
      Vec lhs = tau * A.mul_basis(i, j);
      Vec rhs = A.mul(tau.col(j), tau.col(i));
      if (lhs != rhs) {
        anti.ok = false;
        anti.detail = "fails on (" + A.label(i) + ", " + A.label(j) + ")";
        break;
      }
    }
  out.push_back(anti);
  Check degc{"tau negates degrees", true, ""};
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m)
      if (!tau(m, k).is_zero() && A.deg[m] != -A.deg[k]) {
        degc.ok = false;
        degc.detail = "tau(" + A.label(k) + ") is not of degree " + std::to_string(-A.deg[k]);
      }
  out.push_back(degc);
  if (tri) {
    auto img = [&](const Subspace& S) {
      std::vector<Vec> v;
      for (const auto& b : S.basis()) v.push_back(tau * b);
      return Subspace::span(A.field(), n, v);
    };
    out.push_back({"tau swaps A+ and A-", img(tri->aplus) == tri->aminus && img(tri->aminus) == tri->aplus, ""});
    out.push_back({"tau preserves T", img(tri->tpart) == tri->tpart, ""});
  }
  return out;
}

}  // namespace hwc

#include "hwc/radical.hpp"

#include <algorithm>
#include <numeric>

#include "hwc/upoly.hpp"

namespace hwc {

Module regular_module(AlgPtr B) {
  std::vector<Matrix> d;
  for (int k = 0; k < B->dim(); ++k) d.push_back(B->left_mult(B->basis_vec(k)));
  return Module::from_dense(B, std::vector<int>(B->dim(), 0), d);
}

bool is_absolutely_simple(const Module& S) {
  const int d = S.dim();
  if (!d) return false;
  Echelon e(S.field(), d * d);
  for (int k = 0; k < S.alg->dim(); ++k) {
    e.add(S.dense(k).data());
    if (e.rank() == d * d) return true;
  }
  return false;
}

namespace {

bool split_once(const Module& X, const std::vector<int>& gens, std::mt19937_64& rng, std::vector<Module>& out) {
  auto ends = hom(X, X, gens);
  if (ends.size() <= 1) return false;
  const Field& f = X.field();
  const int n = X.dim();
  Matrix I = Matrix::identity(f, n);
  std::vector<Matrix> cands;
  for (const auto& e : ends) cands.push_back(to_dense(X, X, e));
  for (int t = 0; t < 24; ++t) {
    Matrix m(f, n, n);
    for (const auto& e : cands) m.add_scaled(f.random(rng, 9), e);
    cands.push_back(std::move(m));
  }
  for (const Matrix& x : cands) {
    for (const Scalar& r : field_roots(charpoly(x), rng)) {
      Matrix y = x - I.scaled(r);
      if (y.is_zero()) continue;
      Subspace K = kernel(y);
      PieceSpaces U{K};
      out.push_back(submodule(X, U));
      out.push_back(quotient(X, U));
      return true;
    }
  }
  return false;
}

}  // namespace

SimpleDecomposition decompose_semisimple(const Module& M, const std::vector<int>& gens, std::mt19937_64& rng) {
  if (M.npieces() > 1) throw std::invalid_argument("decompose_semisimple expects a single-piece module");
  SimpleDecomposition out;
  std::vector<Module> queue{M};
  while (!queue.empty()) {
    Module X = std::move(queue.back());
    queue.pop_back();
    if (!X.dim()) continue;
    if (is_absolutely_simple(X)) {
      bool found = false;
      for (size_t i = 0; i < out.simples.size() && !found; ++i)
        if (isomorphic_simple(out.simples[i], X, gens)) {
          ++out.mult[i];
          found = true;
        }
      if (!found) {
        out.simples.push_back(X);
        out.mult.push_back(1);
      }
      continue;
    }
    std::vector<Module> parts;
    if (!split_once(X, gens, rng, parts))
      throw PreconditionError("no split element found: module of dimension " + std::to_string(X.dim()) + " is not split");
    for (auto& p : parts) queue.push_back(std::move(p));
  }
  return out;
}

Subspace jacobson_radical(const Algebra& B) {
  const Field& f = B.field();
  const int n = B.dim();
  if (!f.is_rational() && f.characteristic() <= static_cast<uint64_t>(n))
    throw PreconditionError("trace-form radical needs characteristic 0 or p > dim");
  std::vector<Matrix> L;
  for (int k = 0; k < n; ++k) L.push_back(B.left_mult(B.basis_vec(k)));
  Matrix G(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Matrix p = L[i] * L[j];
      Scalar tr = f.zero();
      for (int t = 0; t < n; ++t) tr += p(t, t);
      G(i, j) = tr;
      G(j, i) = tr;
    }
  return kernel(G);
}

Subspace annihilator(const Algebra& B, const std::vector<Module>& mods) {
  const int n = B.dim();
  int rows = 0;
  for (const auto& m : mods) rows += m.dim() * m.dim();
  Matrix S(B.field(), rows, n);
  for (int k = 0; k < n; ++k) {
    int r = 0;
    for (const auto& m : mods) {
      Matrix d = m.dense(k);
      for (const auto& x : d.data()) S(r++, k) = x;
    }
  }
  return kernel(S);
}

std::vector<Module> simple_modules(AlgPtr B, const Subspace& rad, std::mt19937_64& rng) {
  Module R = regular_module(B);
  Module top = quotient(R, PieceSpaces{rad});
  auto dec = decompose_semisimple(top, generating_basis_elements(*B), rng);
  return dec.simples;
}

Check check_split_semisimple(AlgPtr T) {
  Check c{"T is split semisimple", true, ""};
  std::mt19937_64 rng(0);
  try {
    auto dec = decompose_semisimple(regular_module(T), generating_basis_elements(*T), rng);
    int s = 0;
    for (const auto& m : dec.simples) s += m.dim() * m.dim();
    if (s != T->dim()) {
      c.ok = false;
      c.detail = "sum of squared simple dimensions is " + std::to_string(s) + ", dim T is " + std::to_string(T->dim());
    }
  } catch (const PreconditionError& e) {
    c.ok = false;
    c.detail = e.what();
  }
  return c;
}

namespace {

// solve Σ c_k ρ_m(e_k) = targets[m] for all m
std::optional<Vec> preimage(const Algebra& B, const std::vector<Module>& mods, const std::vector<Matrix>& targets) {
  const int n = B.dim();
  int rows = 0;
  for (const auto& m : mods) rows += m.dim() * m.dim();
  Matrix S(B.field(), rows, n);
  Vec rhs;
  for (const auto& t : targets)
    for (const auto& x : t.data()) rhs.push_back(x);
  for (int k = 0; k < n; ++k) {
    int r = 0;
    for (const auto& m : mods) {
      Matrix d = m.dense(k);
      for (const auto& x : d.data()) S(r++, k) = x;
    }
  }
  return solve(S, rhs);
}

Vec lift_one(const Algebra& B, Vec e) {
  const Scalar three = B.field().from_int(3), two = B.field().from_int(2);
  for (int it = 0; it < 64; ++it) {
    Vec e2 = B.mul(e, e);
    if (e2 == e) return e;
    Vec e3 = B.mul(e2, e);
    e = sub(scale(three, e2), scale(two, e3));
  }
  throw std::runtime_error("idempotent lifting did not converge");
}

}  // namespace

std::vector<Vec> central_idempotents(const Algebra& B, const std::vector<Module>& simples) {
  std::vector<Vec> out;
  for (size_t i = 0; i < simples.size(); ++i) {
    std::vector<Matrix> t;
    for (size_t j = 0; j < simples.size(); ++j)
      t.push_back(i == j ? Matrix::identity(B.field(), simples[j].dim()) : Matrix(B.field(), simples[j].dim(), simples[j].dim()));
    auto z = preimage(B, simples, t);
    if (!z) throw PreconditionError("no central idempotent for simple " + std::to_string(i));
    out.push_back(*z);
  }
  return out;
}

IdempotentLift lift_idempotents(const Algebra& B, const std::vector<Module>& simples) {
  IdempotentLift out;
  std::vector<std::pair<int, int>> slots;
  for (size_t i = 0; i < simples.size(); ++i)
    for (int j = 0; j < simples[i].dim(); ++j) slots.emplace_back(static_cast<int>(i), j);
  const Field& f = B.field();
  Vec E = zero_vec(f, B.dim());
  for (size_t s = 0; s < slots.size(); ++s) {
    auto [i, j] = slots[s];
    Vec e;
    if (s + 1 == slots.size()) {
      e = sub(B.unit, E);
    } else {
      std::vector<Matrix> t;
      for (size_t m = 0; m < simples.size(); ++m) {
        Matrix z(f, simples[m].dim(), simples[m].dim());
        if (static_cast<int>(m) == i) z(j, j) = f.one();
        t.push_back(std::move(z));
      }
      auto pre = preimage(B, simples, t);
      if (!pre) throw PreconditionError("simple modules do not separate the algebra");
      Vec c = sub(B.unit, E);
      e = lift_one(B, B.mul(B.mul(c, *pre), c));
    }
    E = add(E, e);
    out.idem.push_back(std::move(e));
    out.simple_of.push_back(i);
  }
  return out;
}

std::vector<BlockInfo> block_decomposition(const Algebra& B, const std::vector<Vec>& idem) {
  const int m = static_cast<int>(idem.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || find(i) == find(j)) continue;
      Matrix L = B.left_mult(idem[i]);
      bool linked = false;
      for (int k = 0; k < B.dim() && !linked; ++k) {
        Vec x = B.mul(L * B.basis_vec(k), idem[j]);
        if (!is_zero(x)) linked = true;
      }
      if (linked) parent[find(i)] = find(j);
    }
  std::vector<BlockInfo> out;
  std::vector<int> slot(m, -1);
  for (int i = 0; i < m; ++i) {
    int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.push_back(BlockInfo{{}, zero_vec(B.field(), B.dim()), 0});
    }
    auto& b = out[slot[r]];
    b.members.push_back(i);
    b.central = add(b.central, idem[i]);
  }
  for (auto& b : out) b.dim = rank(B.right_mult(b.central));
  return out;
}

}  // namespace hwc

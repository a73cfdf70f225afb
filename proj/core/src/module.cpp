#include "hwc/module.hpp"

#include <algorithm>
#include <set>

namespace hwc {

Module::Module(AlgPtr a, std::vector<int> keys, std::vector<int> dims)
    : alg(std::move(a)), keys_(std::move(keys)), dims_(std::move(dims)) {
  for (size_t i = 1; i < keys_.size(); ++i)
    if (keys_[i - 1] >= keys_[i]) throw std::invalid_argument("module keys must be strictly increasing");
  offs_.resize(keys_.size());
  for (size_t i = 0; i < keys_.size(); ++i) {
    offs_[i] = total_;
    total_ += dims_[i];
  }
  act_.assign(alg->dim(), std::vector<Block>(keys_.size()));
}

int Module::piece_of(int key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return -1;
  return static_cast<int>(it - keys_.begin());
}

int Module::dim_at(int key) const {
  int p = piece_of(key);
  return p < 0 ? 0 : dims_[p];
}

std::vector<int> Module::support() const {
  std::vector<int> s;
  for (size_t p = 0; p < keys_.size(); ++p)
    if (dims_[p]) s.push_back(keys_[p]);
  return s;
}

void Module::set_block(int k, int p, Matrix m) {
  auto t = alg->target_key(k, keys_[p]);
  int q = t ? piece_of(*t) : -1;
  if (q < 0 || m.is_zero()) {
    if (q < 0 && !m.is_zero()) throw std::invalid_argument("action leaves the module pieces");
    act_[k][p] = Block{};
    return;
  }
  if (m.rows() != dims_[q] || m.cols() != dims_[p]) throw std::invalid_argument("block has wrong shape");
  act_[k][p] = Block{q, std::move(m)};
}

Vec Module::piece_part(const Vec& v, int p) const {
  return Vec(v.begin() + offs_[p], v.begin() + offs_[p] + dims_[p]);
}

Vec Module::embed(const Vec& pv, int p) const {
  Vec v = zero_vec(field(), total_);
  for (int i = 0; i < dims_[p]; ++i) v[offs_[p] + i] = pv[i];
  return v;
}

Vec Module::apply(int k, const Vec& v) const {
  Vec r = zero_vec(field(), total_);
  for (int p = 0; p < npieces(); ++p) {
    const Block& b = act_[k][p];
    if (b.to < 0) continue;
    Vec w = b.m * piece_part(v, p);
    for (int i = 0; i < dims_[b.to]; ++i) r[offs_[b.to] + i] += w[i];
  }
  return r;
}

Vec Module::apply(const Vec& a, const Vec& v) const {
  Vec r = zero_vec(field(), total_);
  for (int k = 0; k < alg->dim(); ++k)
    if (!a[k].is_zero()) axpy(r, a[k], apply(k, v));
  return r;
}

Matrix Module::dense(int k) const {
  Matrix m(field(), total_, total_);
  for (int p = 0; p < npieces(); ++p) {
    const Block& b = act_[k][p];
    if (b.to < 0) continue;
    for (int i = 0; i < b.m.rows(); ++i)
      for (int j = 0; j < b.m.cols(); ++j) m(offs_[b.to] + i, offs_[p] + j) = b.m(i, j);
  }
  return m;
}

Matrix Module::dense(const Vec& a) const {
  Matrix m(field(), total_, total_);
  for (int k = 0; k < alg->dim(); ++k) {
    if (a[k].is_zero()) continue;
    for (int p = 0; p < npieces(); ++p) {
      const Block& b = act_[k][p];
      if (b.to < 0) continue;
      for (int i = 0; i < b.m.rows(); ++i)
        for (int j = 0; j < b.m.cols(); ++j)
          if (!b.m(i, j).is_zero()) m(offs_[b.to] + i, offs_[p] + j) += a[k] * b.m(i, j);
    }
  }
  return m;
}

Matrix Module::block_of(const Vec& a, int p, int q) const {
  Matrix m(field(), dims_[q], dims_[p]);
  for (int k = 0; k < alg->dim(); ++k) {
    if (a[k].is_zero()) continue;
    const Block& b = act_[k][p];
    if (b.to == q) m.add_scaled(a[k], b.m);
  }
  return m;
}

Module Module::shifted(int s) const {
  if (alg->basic) throw std::logic_error("shift of a module over a basic algebra");
  Module m = *this;
  for (auto& k : m.keys_) k += s;
  return m;
}

Module Module::from_dense(AlgPtr alg, const std::vector<int>& key_of_basis, const std::vector<Matrix>& dense) {
  std::vector<int> keys, dims;
  for (int k : key_of_basis) {
    if (!keys.empty() && k < keys.back()) throw std::invalid_argument("basis keys must be sorted");
    if (keys.empty() || keys.back() != k) {
      keys.push_back(k);
      dims.push_back(0);
    }
    ++dims.back();
  }
  Module M(alg, keys, dims);
  for (int k = 0; k < alg->dim(); ++k) {
    const Matrix& D = dense[k];
    for (int p = 0; p < M.npieces(); ++p) {
      auto t = alg->target_key(k, keys[p]);
      int q = t ? M.piece_of(*t) : -1;
      for (int i = 0; i < M.total_; ++i) {
        bool inside = q >= 0 && i >= M.offs_[q] && i < M.offs_[q] + dims[q];
        if (inside) continue;
        for (int j = 0; j < dims[p]; ++j)
          if (!D(i, M.offs_[p] + j).is_zero()) throw std::invalid_argument("action is not homogeneous");
      }
      if (q >= 0) M.set_block(k, p, D.submatrix(M.offs_[q], dims[q], M.offs_[p], dims[p]));
    }
  }
  return M;
}

PieceSpaces zero_pieces(const Module& M) {
  PieceSpaces s;
  for (int p = 0; p < M.npieces(); ++p) s.emplace_back(M.field(), M.piece_dim(p));
  return s;
}

PieceSpaces all_pieces(const Module& M) {
  PieceSpaces s;
  for (int p = 0; p < M.npieces(); ++p) s.push_back(Subspace::whole(M.field(), M.piece_dim(p)));
  return s;
}

PieceSpaces add_pieces(const PieceSpaces& a, const PieceSpaces& b) {
  PieceSpaces s;
  for (size_t i = 0; i < a.size(); ++i) s.push_back(a[i] + b[i]);
  return s;
}

int total_dim(const PieceSpaces& s) {
  int t = 0;
  for (const auto& x : s) t += x.dim();
  return t;
}

Module submodule(const Module& M, const PieceSpaces& U) {
  std::vector<int> keys, dims, newp(M.npieces(), -1);
  for (int p = 0; p < M.npieces(); ++p)
    if (U[p].dim()) {
      newp[p] = static_cast<int>(keys.size());
      keys.push_back(M.key(p));
      dims.push_back(U[p].dim());
    }
  Module S(M.alg, keys, dims);
  for (int k = 0; k < M.alg->dim(); ++k)
    for (int p = 0; p < M.npieces(); ++p) {
      const auto& b = M.block(k, p);
      if (newp[p] < 0 || b.to < 0 || newp[b.to] < 0) continue;
      Matrix m(M.field(), U[b.to].dim(), U[p].dim());
      for (int j = 0; j < U[p].dim(); ++j) m.set_col(j, U[b.to].coords(b.m * U[p].basis_vector(j)));
      S.set_block(k, newp[p], std::move(m));
    }
  return S;
}

Vec quotient_coords(const PieceSpaces& U, int p, const Vec& v) {
  Vec r = U[p].reduce(v);
  Vec out;
  for (int c : U[p].complement_columns()) out.push_back(r[c]);
  return out;
}

Module quotient(const Module& M, const PieceSpaces& U) {
  std::vector<int> keys, dims, newp(M.npieces(), -1);
  std::vector<std::vector<int>> comp(M.npieces());
  for (int p = 0; p < M.npieces(); ++p) {
    comp[p] = U[p].complement_columns();
    if (!comp[p].empty()) {
      newp[p] = static_cast<int>(keys.size());
      keys.push_back(M.key(p));
      dims.push_back(static_cast<int>(comp[p].size()));
    }
  }
  Module Q(M.alg, keys, dims);
  for (int k = 0; k < M.alg->dim(); ++k)
    for (int p = 0; p < M.npieces(); ++p) {
      const auto& b = M.block(k, p);
      if (newp[p] < 0 || b.to < 0 || newp[b.to] < 0) continue;
      Matrix m(M.field(), static_cast<int>(comp[b.to].size()), static_cast<int>(comp[p].size()));
      for (size_t j = 0; j < comp[p].size(); ++j) m.set_col(static_cast<int>(j), quotient_coords(U, b.to, b.m.col(comp[p][j])));
      Q.set_block(k, newp[p], std::move(m));
    }
  return Q;
}

PieceSpaces spin_into(const Module& M, PieceSpaces U, const std::vector<std::pair<int, Vec>>& seeds, const std::vector<int>& gens) {
  std::vector<std::pair<int, Vec>> queue;
  for (const auto& [p, v] : seeds)
    if (U[p].add(v)) queue.emplace_back(p, v);
  while (!queue.empty()) {
    auto [p, v] = std::move(queue.back());
    queue.pop_back();
    for (int g : gens) {
      const auto& b = M.block(g, p);
      if (b.to < 0) continue;
      Vec w = b.m * v;
      if (U[b.to].add(w)) queue.emplace_back(b.to, std::move(w));
    }
  }
  return U;
}

PieceSpaces spin(const Module& M, const std::vector<std::pair<int, Vec>>& seeds, const std::vector<int>& gens) {
  return spin_into(M, zero_pieces(M), seeds, gens);
}

Module dual(const Module& M, AlgPtr op) {
  Module D(op, M.keys(), M.dims());
  for (int k = 0; k < M.alg->dim(); ++k)
    for (int p = 0; p < M.npieces(); ++p) {
      const auto& b = M.block(k, p);
      if (b.to >= 0) D.set_block(k, b.to, b.m.transpose());
    }
  return D;
}

Module direct_sum(const Module& a, const Module& b) {
  std::set<int> ks(a.keys().begin(), a.keys().end());
  ks.insert(b.keys().begin(), b.keys().end());
  std::vector<int> keys(ks.begin(), ks.end()), dims;
  for (int k : keys) dims.push_back(a.dim_at(k) + b.dim_at(k));
  Module S(a.alg, keys, dims);
  for (int k = 0; k < a.alg->dim(); ++k)
    for (int p = 0; p < S.npieces(); ++p) {
      auto t = a.alg->target_key(k, keys[p]);
      int q = t ? S.piece_of(*t) : -1;
      if (q < 0) continue;
      Matrix m(a.field(), dims[q], dims[p]);
      int pa = a.piece_of(keys[p]), pb = b.piece_of(keys[p]);
      int da = a.dim_at(keys[p]), ea = a.dim_at(keys[q]);
      if (pa >= 0 && a.block(k, pa).to >= 0) {
        const Matrix& x = a.block(k, pa).m;
        for (int i = 0; i < x.rows(); ++i)
          for (int j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
      }
      if (pb >= 0 && b.block(k, pb).to >= 0) {
        const Matrix& x = b.block(k, pb).m;
        for (int i = 0; i < x.rows(); ++i)
          for (int j = 0; j < x.cols(); ++j) m(ea + i, da + j) = x(i, j);
      }
      S.set_block(k, p, std::move(m));
    }
  return S;
}

namespace {

int target_piece(const Module& M, const Vec& r, int p) {
  for (int k = 0; k < M.alg->dim(); ++k)
    if (!r[k].is_zero()) {
      auto t = M.alg->target_key(k, M.key(p));
      return t ? M.piece_of(*t) : -1;
    }
  return -1;
}

}  // namespace

PieceSpaces radical_of(const Module& M, const std::vector<Vec>& rad_basis) {
  PieceSpaces U = zero_pieces(M);
  for (const auto& r : rad_basis)
    for (int p = 0; p < M.npieces(); ++p) {
      int q = target_piece(M, r, p);
      if (q < 0) continue;
      Matrix m = M.block_of(r, p, q);
      for (int j = 0; j < m.cols(); ++j) U[q].add(m.col(j));
    }
  return U;
}

PieceSpaces socle_of(const Module& M, const std::vector<Vec>& rad_basis) {
  PieceSpaces U;
  for (int p = 0; p < M.npieces(); ++p) {
    Matrix stack(M.field(), 0, M.piece_dim(p));
    for (const auto& r : rad_basis) {
      int q = target_piece(M, r, p);
      if (q < 0) continue;
      stack = stack.vstack(M.block_of(r, p, q));
    }
    U.push_back(kernel(stack));
  }
  return U;
}

bool is_module(const Module& M) {
  const Algebra& A = *M.alg;
  std::vector<Matrix> d;
  for (int k = 0; k < A.dim(); ++k) d.push_back(M.dense(k));
  if (M.dense(A.unit) != Matrix::identity(M.field(), M.dim())) return false;
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      Matrix rhs(M.field(), M.dim(), M.dim());
      for (const auto& [k, c] : A.prod(i, j)) rhs.add_scaled(c, d[k]);
      if (d[i] * d[j] != rhs) return false;
    }
  return true;
}

Module degree_part(const Module& M, int key, AlgPtr A0, const std::vector<int>& idx) {
  int p = M.piece_of(key);
  Module R(A0, {0}, {p < 0 ? 0 : M.piece_dim(p)});
  if (p < 0) return R;
  for (size_t i = 0; i < idx.size(); ++i) {
    const auto& b = M.block(idx[i], p);
    if (b.to == p) R.set_block(static_cast<int>(i), 0, b.m);
  }
  return R;
}

}  // namespace hwc

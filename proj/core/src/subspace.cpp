#include "hwc/subspace.hpp"

#include <algorithm>

namespace hwc {

Subspace Subspace::span(const Field& f, int n, const std::vector<Vec>& vecs) {
  Subspace s(f, n);
  if (vecs.empty()) return s;
  Rref rr = rref(Matrix::from_rows(f, n, vecs));
  for (int i = 0; i < rr.rank; ++i) s.rows_.push_back(rr.R.row(i));
  s.piv_ = rr.pivots;
  return s;
}

Subspace Subspace::whole(const Field& f, int n) {
  Subspace s(f, n);
  for (int i = 0; i < n; ++i) {
    s.rows_.push_back(unit_vec(f, n, i));
    s.piv_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = r[piv_[i]];
    if (!c.is_zero()) axpy(r, -c, rows_[i]);
  }
  return r;
}

bool Subspace::add(const Vec& v) {
  Vec r = reduce(v);
  int p = -1;
  for (int j = 0; j < n_; ++j)
    if (!r[j].is_zero()) {
      p = j;
      break;
    }
  if (p < 0) return false;
  Scalar inv = r[p].inv();
  for (auto& x : r) x = x * inv;
  for (auto& row : rows_)
    if (!row[p].is_zero()) axpy(row, -row[p], r);
  auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
  piv_.insert(piv_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& v : o.rows_)
    if (!contains(v)) return false;
  return true;
}

Vec Subspace::coords(const Vec& v) const {
  Vec c;
  c.reserve(rows_.size());
  Vec r = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    c.push_back(r[piv_[i]]);
    if (!c.back().is_zero()) axpy(r, -c.back(), rows_[i]);
  }
  if (!is_zero(r)) throw std::invalid_argument("vector not in subspace");
  return c;
}

Subspace Subspace::operator+(const Subspace& o) const {
  std::vector<Vec> all = rows_;
  all.insert(all.end(), o.rows_.begin(), o.rows_.end());
  return span(f_, n_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
  // x = sum a_i u_i = sum b_j v_j : kernel of [U^T | -V^T]
  const int a = dim(), b = o.dim();
  if (!a || !b) return Subspace(f_, n_);
  Matrix m(f_, n_, a + b);
  for (int i = 0; i < a; ++i)
    for (int r = 0; r < n_; ++r) m(r, i) = rows_[i][r];
  for (int j = 0; j < b; ++j)
    for (int r = 0; r < n_; ++r) m(r, a + j) = -o.rows_[j][r];
  Matrix k = kernel_basis(m);
  std::vector<Vec> vecs;
  for (int t = 0; t < k.rows(); ++t) {
    Vec x = zero_vec(f_, n_);
    for (int i = 0; i < a; ++i) axpy(x, k(t, i), rows_[i]);
    vecs.push_back(std::move(x));
  }
  return span(f_, n_, vecs);
}

std::vector<int> Subspace::complement_columns() const {
  std::vector<int> out;
  size_t k = 0;
  for (int j = 0; j < n_; ++j) {
    if (k < piv_.size() && piv_[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

Subspace kernel(const Matrix& m) {
  Matrix k = kernel_basis(m);
  std::vector<Vec> rows;
  for (int i = 0; i < k.rows(); ++i) rows.push_back(k.row(i));
  return Subspace::span(m.field(), m.cols(), rows);
}

Subspace image(const Matrix& m) {
  std::vector<Vec> cols;
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return Subspace::span(m.field(), m.rows(), cols);
}

Coordinates::Coordinates(const Field& f, int n, const std::vector<Vec>& basis)
    : f_(f), n_(n), k_(static_cast<int>(basis.size())) {
  rr_ = rref_with_transform(Matrix::from_rows(f, n, basis), E_);
  if (rr_.rank != k_) throw std::invalid_argument("coordinate basis is dependent");
}

std::optional<Vec> Coordinates::coords(const Vec& v) const {
  Vec r = v;
  Vec c;
  c.reserve(k_);
  for (int i = 0; i < k_; ++i) {
    c.push_back(r[rr_.pivots[i]]);
    if (c.back().is_zero()) continue;
    for (int j = 0; j < n_; ++j)
      if (!rr_.R(i, j).is_zero()) r[j] -= c.back() * rr_.R(i, j);
  }
  if (!is_zero(r)) return std::nullopt;
  // v = c^T R = c^T E B
  Vec out = zero_vec(f_, k_);
  for (int i = 0; i < k_; ++i) {
    if (c[i].is_zero()) continue;
    for (int j = 0; j < k_; ++j)
      if (!E_(i, j).is_zero()) out[j] += c[i] * E_(i, j);
  }
  return out;
}

Vec Coordinates::coords_or_throw(const Vec& v) const {
  auto c = coords(v);
  if (!c) throw std::invalid_argument("vector not in span");
  return *c;
}

}  // namespace hwc

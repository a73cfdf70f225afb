#include "hwc/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace hwc {

Vec zero_vec(const Field& f, int n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, int n, int i) {
  Vec v = zero_vec(f, n);
  v[i] = f.one();
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x = c * x;
  return r;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return;
  for (size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Scalar dot(const Vec& a, const Vec& b) {
  Scalar s = a.empty() ? Scalar() : a[0].field().zero();
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
  os << "]";
  return os.str();
}

Matrix::Matrix(const Field& f, int rows, int cols)
    : f_(f), r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, int cols, const std::vector<Vec>& rows) {
  Matrix m(f, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.r_; ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_cols(const Field& f, int rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.c_; ++j) m.set_col(j, cols[j]);
  return m;
}

Vec Matrix::row(int i) const { return Vec(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_); }

Vec Matrix::col(int j) const {
  Vec v;
  v.reserve(r_);
  for (int i = 0; i < r_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::set_row(int i, const Vec& v) {
  for (int j = 0; j < c_; ++j) (*this)(i, j) = v[j];
}

void Matrix::set_col(int j, const Vec& v) {
  for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::operator*(const Matrix& o) const {
  Matrix m(f_, r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Scalar& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) {
        const Scalar& y = o(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  return m;
}

Vec Matrix::operator*(const Vec& v) const {
  Vec r = zero_vec(f_, r_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Scalar& x = (*this)(i, k);
      if (!x.is_zero() && !v[k].is_zero()) r[i] += x * v[k];
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix m = *this;
  m += o;
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  for (size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
  return *this;
}

void Matrix::add_scaled(const Scalar& c, const Matrix& o) {
  if (c.is_zero()) return;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] += c * o.a_[i];
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  for (auto& x : m.a_) x = c * x;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(f_, c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Matrix Matrix::submatrix(int r0, int nr, int c0, int nc) const {
  Matrix m(f_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
  Matrix m(f_, r_ + o.r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
  for (int i = 0; i < o.r_; ++i)
    for (int j = 0; j < c_; ++j) m(r_ + i, j) = o(i, j);
  return m;
}

Matrix Matrix::hstack(const Matrix& o) const {
  Matrix m(f_, r_, c_ + o.c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
    for (int j = 0; j < o.c_; ++j) m(i, c_ + j) = o(i, j);
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

namespace {

Rref rref_impl(const Matrix& m, Matrix* E) {
  Rref out;
  out.R = m;
  Matrix& R = out.R;
  const int rows = R.rows(), cols = R.cols();
  std::vector<int> nz;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!R(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < cols; ++j) std::swap(R(piv, j), R(r, j));
      if (E)
        for (int j = 0; j < E->cols(); ++j) std::swap((*E)(piv, j), (*E)(r, j));
    }
    Scalar inv = R(r, c).inv();
    nz.clear();
    for (int j = c; j < cols; ++j)
      if (!R(r, j).is_zero()) {
        R(r, j) = R(r, j) * inv;
        nz.push_back(j);
      }
    if (E)
      for (int j = 0; j < E->cols(); ++j) (*E)(r, j) = (*E)(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || R(i, c).is_zero()) continue;
      Scalar f = R(i, c);
      for (int j : nz) R(i, j) -= f * R(r, j);
      if (E)
        for (int j = 0; j < E->cols(); ++j)
          if (!(*E)(r, j).is_zero()) (*E)(i, j) -= f * (*E)(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

}  // namespace

Rref rref(const Matrix& m) { return rref_impl(m, nullptr); }

Rref rref_with_transform(const Matrix& m, Matrix& E) {
  E = Matrix::identity(m.field(), m.rows());
  return rref_impl(m, &E);
}

int rank(const Matrix& m) {
  Echelon e(m.field(), m.cols());
  for (int i = 0; i < m.rows(); ++i) e.add(m.row(i));
  return e.rank();
}

Matrix kernel_basis(const Matrix& m) {
  Rref rr = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_piv(m.cols(), false);
  for (int p : rr.pivots) is_piv[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_piv[free]) continue;
    Vec v = zero_vec(f, m.cols());
    v[free] = f.one();
    for (int i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.R(i, free);
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(f, m.cols(), basis);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Rref rr = rref(aug);
  if (rr.rank && rr.pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.field(), m.cols());
  for (int i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.R(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Matrix E;
  Rref rr = rref_with_transform(m, E);
  if (rr.rank != m.rows()) return std::nullopt;
  return E;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix a = m;
  const int n = a.rows();
  Scalar det = m.field().one();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return m.field().zero();
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inv();
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::vector<Scalar> charpoly(const Matrix& m) {
  // Hessenberg reduction followed by the standard recurrence.
  const Field& f = m.field();
  const int n = m.rows();
  Matrix h = m;
  for (int k = 1; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!h(i, k - 1).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(h(piv, j), h(k, j));
      for (int i = 0; i < n; ++i) std::swap(h(i, piv), h(i, k));
    }
    Scalar inv = h(k, k - 1).inv();
    for (int i = k + 1; i < n; ++i) {
      if (h(i, k - 1).is_zero()) continue;
      Scalar u = h(i, k - 1) * inv;
      for (int j = 0; j < n; ++j) h(i, j) -= u * h(k, j);
      for (int j = 0; j < n; ++j) h(j, k) += u * h(j, i);
    }
  }
  std::vector<std::vector<Scalar>> p(n + 1);
  p[0] = {f.one()};
  for (int k = 1; k <= n; ++k) {
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_{i,k} (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
    std::vector<Scalar> pk(k + 1, f.zero());
    for (int i = 0; i < k; ++i) {
      pk[i + 1] += p[k - 1][i];
      pk[i] -= h(k - 1, k - 1) * p[k - 1][i];
    }
    Scalar t = f.one();
    for (int i = k - 1; i >= 1; --i) {
      t *= h(i, i - 1);
      if (t.is_zero()) break;
      Scalar c = t * h(i - 1, k - 1);
      for (size_t j = 0; j < p[i - 1].size(); ++j) pk[j] -= c * p[i - 1][j];
    }
    p[k] = std::move(pk);
  }
  return p[n];
}

bool Echelon::add(Vec row) {
  if (where_.empty()) where_.assign(n_, -1);
  for (int c = 0; c < n_; ++c) {
    if (row[c].is_zero()) continue;
    int r = where_[c];
    if (r < 0) {
      Scalar inv = row[c].inv();
      for (int j = c; j < n_; ++j)
        if (!row[j].is_zero()) row[j] = row[j] * inv;
      where_[c] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(row));
      piv_.push_back(c);
      return true;
    }
    Scalar fac = row[c];
    const Vec& e = rows_[r];
    for (int j = c; j < n_; ++j)
      if (!e[j].is_zero()) row[j] -= fac * e[j];
  }
  return false;
}

std::vector<Vec> Echelon::kernel() const {
  std::vector<int> where = where_;
  if (where.empty()) where.assign(n_, -1);
  // back substitution: process pivot rows from the rightmost pivot leftwards
  std::vector<int> order(rows_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return piv_[a] > piv_[b]; });
  std::vector<Vec> out;
  for (int free = 0; free < n_; ++free) {
    if (where[free] >= 0) continue;
    Vec x = zero_vec(f_, n_);
    x[free] = f_.one();
    for (int r : order) {
      const Vec& e = rows_[r];
      Scalar s = f_.zero();
      for (int j = piv_[r] + 1; j < n_; ++j)
        if (!e[j].is_zero() && !x[j].is_zero()) s += e[j] * x[j];
      x[piv_[r]] = -s;
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace hwc

#pragma once

#include <vector>

#include "hwc/matrix.hpp"

namespace hwc {

// Subspace of K^n kept as a reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& f, int n) : f_(f), n_(n) {}
  static Subspace span(const Field& f, int n, const std::vector<Vec>& vecs);
  static Subspace whole(const Field& f, int n);

  const Field& field() const { return f_; }
  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& basis() const& { return rows_; }
  std::vector<Vec> basis() && { return std::move(rows_); }
  const Vec& basis_vector(int i) const { return rows_[i]; }
  const std::vector<int>& pivots() const { return piv_; }
  Matrix basis_matrix() const { return Matrix::from_rows(f_, n_, rows_); }

  bool add(const Vec& v);  // true when the dimension grows
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  bool contains(const Subspace& o) const;
  Vec coords(const Vec& v) const;  // throws if v is outside
  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  std::vector<int> complement_columns() const;

 private:
  Field f_;
  int n_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> piv_;
};

Subspace kernel(const Matrix& m);  // {x : m x = 0}
Subspace image(const Matrix& m);   // column space

// Coordinates with respect to an arbitrary list of independent vectors.
class Coordinates {
 public:
  Coordinates() = default;
  Coordinates(const Field& f, int n, const std::vector<Vec>& basis);
  int size() const { return k_; }
  std::optional<Vec> coords(const Vec& v) const;
  Vec coords_or_throw(const Vec& v) const;

 private:
  Field f_;
  int n_ = 0, k_ = 0;
  Rref rr_;
  Matrix E_;
};

}  // namespace hwc

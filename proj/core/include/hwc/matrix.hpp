#pragma once

#include <optional>
#include <vector>

#include "hwc/scalar.hpp"

namespace hwc {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, int n);
Vec unit_vec(const Field& f, int n, int i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a*x
Scalar dot(const Vec& a, const Vec& b);
std::string vec_str(const Vec& v);

// Dense row-major matrix over a fixed field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& f, int rows, int cols);
  static Matrix identity(const Field& f, int n);
  static Matrix from_rows(const Field& f, int cols, const std::vector<Vec>& rows);
  static Matrix from_cols(const Field& f, int rows, const std::vector<Vec>& cols);

  int rows() const { return r_; }
  int cols() const { return c_; }
  const Field& field() const { return f_; }
  Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  void set_row(int i, const Vec& v);
  void set_col(int j, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix& operator+=(const Matrix& o);
  void add_scaled(const Scalar& c, const Matrix& o);
  Matrix transpose() const;
  Matrix submatrix(int r0, int nr, int c0, int nc) const;
  Matrix vstack(const Matrix& o) const;
  Matrix hstack(const Matrix& o) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  std::vector<Scalar>& data() & { return a_; }
  const std::vector<Scalar>& data() const& { return a_; }
  std::vector<Scalar> data() && { return std::move(a_); }

 private:
  Field f_;
  int r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

struct Rref {
  Matrix R;
  std::vector<int> pivots;
  int rank = 0;
};

// Pivot: first column with a nonzero entry, lowest row index among remaining rows.
Rref rref(const Matrix& m);
// Same, also returning E with E * m == R.
Rref rref_with_transform(const Matrix& m, Matrix& E);
int rank(const Matrix& m);
Matrix kernel_basis(const Matrix& m);  // rows span {x : m x = 0}
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);
// monic characteristic polynomial, coefficients from degree 0 upwards
std::vector<Scalar> charpoly(const Matrix& m);

// Incremental row echelon form over a fixed number of unknowns.
class Echelon {
 public:
  Echelon(const Field& f, int n) : f_(f), n_(n) {}
  bool add(Vec row);  // true when rank grows
  int rank() const { return static_cast<int>(rows_.size()); }
  int unknowns() const { return n_; }
  std::vector<Vec> kernel() const;

 private:
  Field f_;
  int n_;
  std::vector<Vec> rows_;      // leading entry 1 at piv_[i]
  std::vector<int> piv_;
  std::vector<int> where_;     // column -> row index or -1
};

}  // namespace hwc

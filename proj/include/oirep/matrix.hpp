#pragma once

#include <optional>
#include <vector>

#include "oirep/scalar.hpp"

namespace oirep {

using Vec = std::vector<Scalar>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);

// Dense exact matrix. 0 x n and n x 0 shapes are legal and occur routinely
// (levels of dimension zero).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);
  static Matrix column(const Vec& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const Matrix& o) const = default;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;

  Vec apply(const Vec& v) const;  // matrix * column vector

  bool is_zero() const;
  bool is_identity() const;

  Vec col(int j) const;
  Vec row(int i) const;
  void set_col(int j, const Vec& v);
  Matrix cols_selected(const std::vector<int>& idx) const;
  void paste(int r0, int c0, const Matrix& m);

  std::string str() const;  // debugging aid

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> a_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

// Unique reduced row echelon form. The default path integerizes each row and
// runs fraction-free (Bareiss) forward elimination before the Jordan phase;
// rref_naive is the plain rational Gauss-Jordan used as a cross-check oracle.
Matrix rref(const Matrix& m, std::vector<int>* pivot_cols = nullptr);
Matrix rref_naive(const Matrix& m, std::vector<int>* pivot_cols = nullptr);

int rank(const Matrix& m);
bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);

// Columns form a basis of ker m; canonical (free-variable) basis from rref.
Matrix kernel_basis(const Matrix& m);

// Particular solution of m x = b with free variables set to 0.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
// X with m X = b, column by column; nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b);

// Subspaces are represented by matrices whose columns span them. The
// canonical form (rref of the transpose, transposed back) makes equality
// a plain comparison.
Matrix column_space(const Matrix& m);
Matrix image_basis(const Matrix& m);  // alias of column_space
Matrix intersect_subspaces(const Matrix& a, const Matrix& b);
Matrix sum_subspaces(const Matrix& a, const Matrix& b);
bool subspace_equal(const Matrix& a, const Matrix& b);
bool subspace_contains(const Matrix& space, const Vec& v);
bool subspace_contains_all(const Matrix& space, const Matrix& vectors);

// Incrementally grown subspace with echelonized internal rows; the workhorse
// of saturation loops (ideal closures, submodule generation).
class SpanBuilder {
 public:
  explicit SpanBuilder(int ambient) : ambient_(ambient) {}

  // Returns true when the vector enlarged the span.
  bool insert(Vec v);
  bool contains(Vec v) const;
  int dim() const { return int(rows_.size()); }
  int ambient() const { return ambient_; }
  Matrix basis() const;  // canonical column basis

 private:
  void reduce(Vec& v) const;
  int ambient_;
  std::vector<Vec> rows_;     // pivot-normalized, sorted by pivot
  std::vector<int> pivots_;
};

}  // namespace oirep

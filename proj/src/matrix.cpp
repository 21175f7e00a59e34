#include "oirep/matrix.hpp"

#include <sstream>

#include "oirep/errors.hpp"

namespace oirep {

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(int(rows.size()), cols);
  for (int i = 0; i < int(rows.size()); ++i) {
    if (int(rows[i].size()) != cols) throw DimensionError("ragged row list");
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::column(const Vec& v) {
  Matrix m(int(v.size()), 1);
  for (int i = 0; i < int(v.size()); ++i) m.at(i, 0) = v[i];
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix add shape mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sub shape mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix mul shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (int(v.size()) != cols_) throw DimensionError("matrix apply shape mismatch");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? Scalar(1) : Scalar(0))) return false;
  return true;
}

Vec Matrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Matrix::set_col(int j, const Vec& v) {
  if (int(v.size()) != rows_) throw DimensionError("set_col length mismatch");
  for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::cols_selected(const std::vector<int>& idx) const {
  Matrix r(rows_, int(idx.size()));
  for (int j = 0; j < int(idx.size()); ++j)
    for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
  return r;
}

void Matrix::paste(int r0, int c0, const Matrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) throw DimensionError("paste out of range");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) at(r0 + i, c0 + j) = m.at(i, j);
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    os << "\n";
  }
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
  Matrix r(a.rows(), a.cols() + b.cols());
  r.paste(0, 0, a);
  r.paste(0, a.cols(), b);
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack col mismatch");
  Matrix r(a.rows() + b.rows(), a.cols());
  r.paste(0, 0, a);
  r.paste(a.rows(), 0, b);
  return r;
}

namespace {

// Clears denominators in each row so the Bareiss phase runs over integers.
void integerize_rows(Matrix& m) {
  if (field_mode().prime) return;  // residues already have denominator 1
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (int j = 0; j < m.cols(); ++j) {
      mpz_class d = m.at(i, j).denominator();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    if (l == 1) continue;
    Scalar c{mpq_class(l)};
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) *= c;
  }
}

void jordan_phase(Matrix& r, const std::vector<int>& pivots) {
  for (int k = int(pivots.size()) - 1; k >= 0; --k) {
    int pc = pivots[k];
    Scalar inv = r.at(k, pc).inverse();
    for (int j = pc; j < r.cols(); ++j) r.at(k, j) *= inv;
    for (int i = 0; i < k; ++i) {
      Scalar f = r.at(i, pc);
      if (f.is_zero()) continue;
      for (int j = pc; j < r.cols(); ++j) r.at(i, j) -= f * r.at(k, j);
    }
  }
}

}  // namespace

Matrix rref(const Matrix& m, std::vector<int>* pivot_cols) {
  Matrix r = m;
  integerize_rows(r);
  std::vector<int> pivots;
  Scalar prev(1);
  int row = 0;
  for (int c = 0; c < r.cols() && row < r.rows(); ++c) {
    int p = -1;
    for (int i = row; i < r.rows(); ++i)
      if (!r.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(p, j), r.at(row, j));
    const Scalar pivot = r.at(row, c);
    for (int i = row + 1; i < r.rows(); ++i) {
      const Scalar f = r.at(i, c);
      for (int j = c + 1; j < r.cols(); ++j)
        r.at(i, j) = (pivot * r.at(i, j) - f * r.at(row, j)) / prev;
      r.at(i, c) = Scalar(0);
    }
    prev = pivot;
    pivots.push_back(c);
    ++row;
  }
  jordan_phase(r, pivots);
  if (pivot_cols) *pivot_cols = pivots;
  return r;
}

Matrix rref_naive(const Matrix& m, std::vector<int>* pivot_cols) {
  Matrix r = m;
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < r.cols() && row < r.rows(); ++c) {
    int p = -1;
    for (int i = row; i < r.rows(); ++i)
      if (!r.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(p, j), r.at(row, j));
    Scalar inv = r.at(row, c).inverse();
    for (int j = c; j < r.cols(); ++j) r.at(row, j) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == row) continue;
      Scalar f = r.at(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < r.cols(); ++j) r.at(i, j) -= f * r.at(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  if (pivot_cols) *pivot_cols = pivots;
  return r;
}

int rank(const Matrix& m) {
  std::vector<int> pivots;
  rref(m, &pivots);
  return int(pivots.size());
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  auto x = solve_matrix(m, Matrix::identity(m.rows()));
  if (!x || rank(m) != m.rows()) throw DomainError("matrix not invertible");
  return *x;
}

Matrix kernel_basis(const Matrix& m) {
  std::vector<int> pivots;
  Matrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(m.cols(), int(free_cols.size()));
  for (int j = 0; j < int(free_cols.size()); ++j) {
    int fc = free_cols[j];
    k.at(fc, j) = Scalar(1);
    for (int i = 0; i < int(pivots.size()); ++i) k.at(pivots[i], j) = -r.at(i, fc);
  }
  return k;
}

std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw DimensionError("solve shape mismatch");
  std::vector<int> pivots;
  Matrix r = rref(hstack(m, b), &pivots);
  Matrix x(m.cols(), b.cols());
  for (int k = 0; k < int(pivots.size()); ++k) {
    if (pivots[k] >= m.cols()) return std::nullopt;  // pivot in augmented part
    for (int j = 0; j < b.cols(); ++j) x.at(pivots[k], j) = r.at(k, m.cols() + j);
  }
  return x;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  auto x = solve_matrix(m, Matrix::column(b));
  if (!x) return std::nullopt;
  return x->col(0);
}

Matrix column_space(const Matrix& m) {
  std::vector<int> pivots;
  Matrix r = rref(m.transpose(), &pivots);
  Matrix basis(int(pivots.size()), m.rows());
  for (int i = 0; i < int(pivots.size()); ++i)
    for (int j = 0; j < m.rows(); ++j) basis.at(i, j) = r.at(i, j);
  return basis.transpose();
}

Matrix image_basis(const Matrix& m) { return column_space(m); }

Matrix intersect_subspaces(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("subspace ambient mismatch");
  if (a.cols() == 0 || b.cols() == 0) return Matrix(a.rows(), 0);
  Matrix k = kernel_basis(hstack(a, b));
  Matrix ua(a.cols(), k.cols());
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < k.cols(); ++j) ua.at(i, j) = k.at(i, j);
  return column_space(a * ua);
}

Matrix sum_subspaces(const Matrix& a, const Matrix& b) { return column_space(hstack(a, b)); }

bool subspace_equal(const Matrix& a, const Matrix& b) {
  return column_space(a) == column_space(b);
}

bool subspace_contains(const Matrix& space, const Vec& v) {
  if (vec_is_zero(v)) return true;
  return rank(hstack(space, Matrix::column(v))) == rank(space);
}

bool subspace_contains_all(const Matrix& space, const Matrix& vectors) {
  if (vectors.cols() == 0) return true;
  return rank(hstack(space, vectors)) == rank(space);
}

void SpanBuilder::reduce(Vec& v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = v[pivots_[k]];  // copy: the loop below writes v[pivot]
    if (c.is_zero()) continue;
    for (int j = 0; j < ambient_; ++j)
      if (!rows_[k][j].is_zero()) v[j] -= c * rows_[k][j];
  }
}

bool SpanBuilder::insert(Vec v) {
  if (int(v.size()) != ambient_) throw DimensionError("span insert length mismatch");
  reduce(v);
  int p = -1;
  for (int j = 0; j < ambient_; ++j)
    if (!v[j].is_zero()) {
      p = j;
      break;
    }
  if (p < 0) return false;
  Scalar inv = v[p].inverse();
  for (int j = 0; j < ambient_; ++j) v[j] *= inv;
  // keep rows fully reduced against the new pivot
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = rows_[k][p];
    if (c.is_zero()) continue;
    for (int j = 0; j < ambient_; ++j)
      if (!v[j].is_zero()) rows_[k][j] -= c * v[j];
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

bool SpanBuilder::contains(Vec v) const {
  if (int(v.size()) != ambient_) throw DimensionError("span contains length mismatch");
  reduce(v);
  return vec_is_zero(v);
}

Matrix SpanBuilder::basis() const {
  Matrix rows(int(rows_.size()), ambient_);
  for (int i = 0; i < int(rows_.size()); ++i)
    for (int j = 0; j < ambient_; ++j) rows.at(i, j) = rows_[i][j];
  return rows.transpose();
}

}  // namespace oirep

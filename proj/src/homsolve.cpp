#include "oirep/homsolve.hpp"

#include "oirep/errors.hpp"

namespace oirep {

namespace {

// vec() flattens row-major: vec(M)[i*cols + j] = M(i, j).

Matrix reshape_col(const Vec& v, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = v[size_t(i) * cols + j];
  return m;
}

Vec flatten(const Matrix& m) {
  Vec v(size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v[size_t(i) * m.cols() + j] = m.at(i, j);
  return v;
}

// Coefficient matrix of vec(A * phi) given the coefficient matrix of
// vec(phi), phi of shape (a.cols() x dv).
Matrix leftmul_coeff(const Matrix& a, int dv, const Matrix& phi_coef) {
  Matrix out(a.rows() * dv, phi_coef.cols());
  for (int t = 0; t < phi_coef.cols(); ++t) {
    Matrix m = reshape_col(phi_coef.col(t), a.cols(), dv);
    out.set_col(t, flatten(a * m));
  }
  return out;
}

// Coefficient matrix of vec(Y * z) given the coefficient matrix of vec(Y),
// Y of shape (rows x z.rows()).
Matrix rightmul_coeff(const Matrix& y_coef, int rows, const Matrix& z) {
  Matrix out(rows * z.cols(), y_coef.cols());
  for (int t = 0; t < y_coef.cols(); ++t) {
    Matrix m = reshape_col(y_coef.col(t), rows, z.rows());
    out.set_col(t, flatten(m * z));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Matrix>> intertwiner_basis(const ChainSpec& spec) {
  const int n_levels = int(spec.dims_v.size());
  if (int(spec.dims_w.size()) != n_levels || int(spec.edges.size()) != n_levels - 1)
    throw DimensionError("chain spec shape mismatch");

  std::vector<Matrix> phi;  // phi[m]: (dw*dv) x K coefficient matrices
  phi.reserve(n_levels);
  int K = spec.dims_w[0] * spec.dims_v[0];
  phi.push_back(Matrix::identity(K));

  for (int n = 0; n + 1 < n_levels; ++n) {
    const int dv0 = spec.dims_v[n], dv1 = spec.dims_v[n + 1];
    const int dw0 = spec.dims_w[n], dw1 = spec.dims_w[n + 1];
    const auto& cons = spec.edges[n];

    // a zero-dimensional target level imposes nothing and carries nothing
    if (dw1 == 0) {
      phi.push_back(Matrix(0, K));
      continue;
    }

    Matrix T(dv1, int(cons.size()) * dv0);
    for (size_t k = 0; k < cons.size(); ++k) {
      if (cons[k].first.rows() != dv1 || cons[k].first.cols() != dv0 ||
          cons[k].second.rows() != dw1 || cons[k].second.cols() != dw0)
        throw DimensionError("chain edge shape mismatch");
      T.paste(0, int(k) * dv0, cons[k].first);
    }

    // rhs_coef: per constraint k, coefficients of vec(W_k * phi_n)
    std::vector<Matrix> rhs_coef(cons.size());
    for (size_t k = 0; k < cons.size(); ++k)
      rhs_coef[k] = leftmul_coeff(cons[k].second, dv0, phi[n]);

    // consistency: R(t) annihilates ker T
    Matrix tker = kernel_basis(T);
    if (tker.cols() > 0 && dw1 > 0 && K > 0) {
      Matrix cond(tker.cols() * dw1, K);
      for (int q = 0; q < tker.cols(); ++q)
        for (int jglob = 0; jglob < T.cols(); ++jglob) {
          const Scalar& c = tker.at(jglob, q);
          if (c.is_zero()) continue;
          int k = jglob / dv0, jj = jglob % dv0;
          for (int i = 0; i < dw1; ++i)
            for (int t = 0; t < K; ++t) {
              const Scalar& rc = rhs_coef[k].at(i * dv0 + jj, t);
              if (!rc.is_zero()) cond.at(q * dw1 + i, t) += c * rc;
            }
        }
      Matrix b = kernel_basis(cond);
      if (b.cols() < K) {
        for (auto& p : phi) p = p * b;
        for (auto& rc : rhs_coef) rc = rc * b;
        K = b.cols();
      }
    }

    // pivot columns of T give an injective restriction; complete to a basis
    std::vector<int> tpiv;
    rref(T, &tpiv);
    Matrix that = T.cols_selected(tpiv);
    SpanBuilder span(dv1);
    for (int j = 0; j < that.cols(); ++j) span.insert(that.col(j));
    std::vector<int> fresh;
    for (int i = 0; i < dv1 && span.dim() < dv1; ++i) {
      Vec e(dv1);
      e[i] = Scalar(1);
      if (span.insert(e)) fresh.push_back(i);
    }
    const int r = int(tpiv.size());
    const int nfree = int(fresh.size());
    Matrix basis_cols(dv1, dv1);
    basis_cols.paste(0, 0, that);
    for (int s = 0; s < nfree; ++s) basis_cols.at(fresh[s], r + s) = Scalar(1);
    Matrix z = dv1 > 0 ? inverse(basis_cols) : Matrix(0, 0);

    // Y = [Rhat | G]: dw1 x dv1, param-linear in (t, g); phi_{n+1} = Y * z
    const int newK = K + dw1 * nfree;
    Matrix y_coef(dw1 * dv1, newK);
    for (int idx = 0; idx < r; ++idx) {
      int jglob = tpiv[idx];
      int k = jglob / dv0, jj = jglob % dv0;
      for (int i = 0; i < dw1; ++i)
        for (int t = 0; t < K; ++t)
          y_coef.at(i * dv1 + idx, t) = rhs_coef[k].at(i * dv0 + jj, t);
    }
    for (int s = 0; s < nfree; ++s)
      for (int i = 0; i < dw1; ++i)
        y_coef.at(i * dv1 + (r + s), K + i * nfree + s) = Scalar(1);

    for (auto& p : phi) p = hstack(p, Matrix(p.rows(), dw1 * nfree));
    phi.push_back(dv1 > 0 ? rightmul_coeff(y_coef, dw1, z) : Matrix(0, newK));
    K = newK;
  }

  std::vector<std::vector<Matrix>> out(K);
  for (int t = 0; t < K; ++t) {
    out[t].reserve(n_levels);
    for (int m = 0; m < n_levels; ++m)
      out[t].push_back(reshape_col(phi[m].col(t), spec.dims_w[m], spec.dims_v[m]));
  }
  return out;
}

}  // namespace oirep

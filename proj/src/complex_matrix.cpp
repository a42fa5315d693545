// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgraph/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace qgraph {

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw DimensionMismatch("ragged initializer for CMatrix");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::conjugate_transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool CMatrix::all_finite() const {
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                       std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw DimensionMismatch("block out of range");
  }
  CMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void CMatrix::set_block(std::size_t r0, std::size_t c0, const CMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw DimensionMismatch("set_block out of range");
  }
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix addition size mismatch");
  }
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix subtraction size mismatch");
  }
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matrix product size mismatch");
  }
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

CMatrix operator*(Complex s, const CMatrix& a) {
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

std::vector<double> elimination_pivots(const CMatrix& m) {
  const std::size_t steps = std::min(m.rows(), m.cols());
  std::vector<double> pivots(steps, 0.0);
  if (steps == 0) return pivots;

  CMatrix w = m;
  std::vector<std::size_t> rows(m.rows()), cols(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < m.cols(); ++j) cols[j] = j;

  for (std::size_t k = 0; k < steps; ++k) {
    // Complete pivoting: largest remaining magnitude.
    double best = -1.0;
    std::size_t br = k, bc = k;
    for (std::size_t i = k; i < m.rows(); ++i) {
      for (std::size_t j = k; j < m.cols(); ++j) {
        double v = std::abs(w(rows[i], cols[j]));
        if (v > best) {
          best = v;
          br = i;
          bc = j;
        }
      }
    }
    std::swap(rows[k], rows[br]);
    std::swap(cols[k], cols[bc]);
    pivots[k] = best;
    if (best == 0.0) break;

    const Complex p = w(rows[k], cols[k]);
    for (std::size_t i = k + 1; i < m.rows(); ++i) {
      const Complex f = w(rows[i], cols[k]) / p;
      if (f == Complex(0.0, 0.0)) continue;
      for (std::size_t j = k; j < m.cols(); ++j) {
        w(rows[i], cols[j]) -= f * w(rows[k], cols[j]);
      }
    }
  }
  return pivots;
}

std::size_t rank_tol(const CMatrix& m, double tol) {
  if (m.empty()) return 0;
  const double threshold = tol * std::max(1.0, m.max_abs());
  std::size_t r = 0;
  for (double p : elimination_pivots(m)) {
    if (p > threshold) ++r;
  }
  return r;
}

CMatrix inverse(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("inverse needs a square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return CMatrix();

  const double threshold = tol * std::max(1.0, m.max_abs());
  CMatrix w = m;
  CMatrix inv = CMatrix::identity(n);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t br = k;
    double best = std::abs(w(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = std::abs(w(i, k));
      if (v > best) {
        best = v;
        br = i;
      }
    }
    if (best <= threshold) {
      throw SingularMatrix("pivot below tolerance in inverse");
    }
    if (br != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w(k, j), w(br, j));
        std::swap(inv(k, j), inv(br, j));
      }
    }
    const Complex p = w(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      w(k, j) /= p;
      inv(k, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Complex f = w(i, k);
      if (f == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        w(i, j) -= f * w(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("is_hermitian needs a square matrix");
  }
  const double defect = (m - m.conjugate_transpose()).frobenius_norm();
  return defect <= tol * std::max(1.0, m.frobenius_norm());
}

std::vector<std::size_t> independent_columns(const CMatrix& m,
                                             double threshold) {
  std::vector<std::size_t> chosen;
  // Reduced basis vectors together with their pivot rows.
  std::vector<std::vector<Complex>> basis;
  std::vector<std::size_t> pivot_row;

  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<Complex> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Complex f = v[pivot_row[b]] / basis[b][pivot_row[b]];
      if (f == Complex(0.0, 0.0)) continue;
      for (std::size_t i = 0; i < m.rows(); ++i) v[i] -= f * basis[b][i];
    }
    std::size_t arg = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      double a = std::abs(v[i]);
      if (a > best) {
        best = a;
        arg = i;
      }
    }
    if (best > threshold) {
      chosen.push_back(j);
      basis.push_back(std::move(v));
      pivot_row.push_back(arg);
    }
  }
  return chosen;
}

}  // namespace qgraph

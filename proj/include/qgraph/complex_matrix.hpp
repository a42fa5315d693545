// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qgraph/errors.hpp"

namespace qgraph {

using Complex = std::complex<double>;

/// Relative tolerance shared by rank, singularity and Hermiticity decisions.
inline constexpr double kDefaultTol = 1e-10;

/// Dense complex matrix in row-major order. Everything here is sized for
/// vertex-coupling work (n up to a few dozen), so plain O(n^3) elimination
/// is used throughout; no attempt is made at blocked or sparse algorithms.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  CMatrix conjugate_transpose() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const CMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, const CMatrix& a);

/// Magnitudes of the pivots met during complete-pivot Gaussian elimination,
/// one per elimination step (min(rows, cols) entries, zeros once the
/// remaining block vanishes).
std::vector<double> elimination_pivots(const CMatrix& m);

/// Numerical rank: pivots with magnitude above tol * max(1, largest entry
/// magnitude of m). Empty matrices have rank 0.
std::size_t rank_tol(const CMatrix& m, double tol = kDefaultTol);

/// Gauss-Jordan inverse with partial pivoting. Throws SingularMatrix when a
/// pivot falls below tol * max(1, largest entry magnitude of m). The inverse
/// of the 0 x 0 matrix is the 0 x 0 matrix.
CMatrix inverse(const CMatrix& m, double tol = kDefaultTol);

/// True iff ||m - m*||_F <= tol * max(1, ||m||_F). Throws DimensionMismatch
/// for non-square input.
bool is_hermitian(const CMatrix& m, double tol = kDefaultTol);

/// Lexicographically smallest maximal set of linearly independent columns,
/// scanning left to right; a column counts as independent when its residual
/// after elimination against the chosen ones exceeds `threshold` (an
/// absolute magnitude cutoff).
std::vector<std::size_t> independent_columns(const CMatrix& m,
                                             double threshold);

}  // namespace qgraph

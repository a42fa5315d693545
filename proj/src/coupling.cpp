// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgraph/coupling.hpp"

#include <algorithm>
#include <cmath>

namespace qgraph {

namespace {

// Factor by which a pivot must clear the rank threshold (on either side)
// before the rank of B counts as unambiguous.
constexpr double kAmbiguityBand = 100.0;

CMatrix hstack(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

CMatrix vstack(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

// Column-permutes m so that output column s holds input column perm[s].
CMatrix permute_columns(const CMatrix& m, const std::vector<std::size_t>& perm) {
  CMatrix out(m.rows(), m.cols());
  for (std::size_t s = 0; s < perm.size(); ++s)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, s) = m(i, perm[s]);
  return out;
}

// Applies the inverse column permutation: output column perm[s] holds input
// column s. This realizes "canonical slot s belongs to original edge perm[s]"
// when going from canonical blocks back to the original numbering.
CMatrix unpermute_columns(const CMatrix& m,
                          const std::vector<std::size_t>& perm) {
  CMatrix out(m.rows(), m.cols());
  for (std::size_t s = 0; s < perm.size(); ++s)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, perm[s]) = m(i, s);
  return out;
}

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

}  // namespace

AdmissibilityReport validate(const Coupling& c, double tol) {
  if (c.A.rows() != c.A.cols() || c.B.rows() != c.B.cols() ||
      c.A.rows() != c.B.rows() || c.A.rows() != c.n) {
    throw DimensionMismatch("coupling matrices must both be n x n");
  }
  AdmissibilityReport rep;
  rep.rank_found = rank_tol(hstack(c.A, c.B), tol);
  rep.rank_ok = rep.rank_found == c.n;
  const CMatrix ab = c.A * c.B.conjugate_transpose();
  rep.hermiticity_defect = (ab - ab.conjugate_transpose()).frobenius_norm();
  rep.hermitian_ok =
      rep.hermiticity_defect <= tol * std::max(1.0, ab.frobenius_norm());
  return rep;
}

Coupling from_unitary(const CMatrix& u, double tol) {
  if (u.rows() != u.cols()) {
    throw NotUnitary("unitary parametrization needs a square matrix");
  }
  const std::size_t n = u.rows();
  const double defect =
      (u * u.conjugate_transpose() - CMatrix::identity(n)).frobenius_norm();
  if (defect > tol * std::max(1.0, u.frobenius_norm())) {
    throw NotUnitary("matrix is not unitary within tolerance");
  }
  Coupling c;
  c.n = n;
  c.A = u - CMatrix::identity(n);
  c.B = Complex(0.0, 1.0) * (u + CMatrix::identity(n));
  return c;
}

CMatrix delta_unitary(std::size_t n, double alpha) {
  const Complex off = 2.0 / Complex(static_cast<double>(n), alpha);
  CMatrix u(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) u(j, k) = off - (j == k ? 1.0 : 0.0);
  return u;
}

STForm delta_coupling(std::size_t n, double alpha) {
  STForm f;
  f.n = n;
  f.m = 1;
  f.perm = identity_perm(n);
  f.S = CMatrix(1, 1);
  f.S(0, 0) = alpha;
  f.T = CMatrix(1, n - 1);
  for (std::size_t l = 0; l + 1 < n; ++l) f.T(0, l) = 1.0;
  return f;
}

Coupling st_to_coupling(const STForm& f) {
  const std::size_t n = f.n;
  const std::size_t m = f.m;
  CMatrix a0(n, n);
  CMatrix b0(n, n);
  a0.set_block(0, 0, Complex(-1.0, 0.0) * f.S);
  a0.set_block(m, 0, f.T.conjugate_transpose());
  a0.set_block(m, m, Complex(-1.0, 0.0) * CMatrix::identity(n - m));
  b0.set_block(0, 0, CMatrix::identity(m));
  b0.set_block(0, m, f.T);

  Coupling c;
  c.n = n;
  c.A = unpermute_columns(a0, f.perm);
  c.B = unpermute_columns(b0, f.perm);
  return c;
}

STForm to_st_form(const Coupling& c, double tol) {
  const AdmissibilityReport rep = validate(c, tol);
  if (!rep.admissible()) {
    throw NotAdmissible("coupling fails the admissibility conditions");
  }
  const std::size_t n = c.n;

  // m = rank(B), refused when any pivot sits inside the ambiguity band
  // around the threshold.
  const double threshold = tol * std::max(1.0, c.B.max_abs());
  std::size_t m = 0;
  for (double p : elimination_pivots(c.B)) {
    if (p > threshold / kAmbiguityBand && p < threshold * kAmbiguityBand) {
      throw RankAmbiguous("rank of B is ambiguous at the given tolerance");
    }
    if (p > threshold) ++m;
  }

  // Lexicographically smallest independent column m-tuple of B first, the
  // remaining columns ascending.
  std::vector<std::size_t> perm = independent_columns(c.B, threshold);
  if (perm.size() != m) {
    throw RankAmbiguous("column selection disagrees with rank of B");
  }
  {
    std::vector<bool> used(n, false);
    for (std::size_t j : perm) used[j] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (!used[j]) perm.push_back(j);
  }

  CMatrix a = permute_columns(c.A, perm);
  CMatrix b = permute_columns(c.B, perm);

  // Lexicographically smallest row m-tuple making the leading m x m block of
  // B nonsingular, then all other rows ascending.
  std::vector<std::size_t> row_order =
      independent_columns(b.block(0, 0, n, m).conjugate_transpose(), threshold);
  if (row_order.size() != m) {
    throw RankAmbiguous("row selection disagrees with rank of B");
  }
  {
    std::vector<bool> used(n, false);
    for (std::size_t i : row_order) used[i] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i]) row_order.push_back(i);
  }
  {
    CMatrix ar(n, n), br(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        ar(i, j) = a(row_order[i], j);
        br(i, j) = b(row_order[i], j);
      }
    a = ar;
    b = br;
  }

  // Zero the trailing rows of B with combinations of the leading ones, then
  // normalize the leading block to the identity.
  CMatrix b11_inv;
  try {
    b11_inv = inverse(b.block(0, 0, m, m), tol);
  } catch (const SingularMatrix&) {
    throw RankAmbiguous("leading block of B is too ill-conditioned to reduce");
  }
  if (m < n) {
    const CMatrix coeff =
        b.block(m, 0, n - m, m) * b11_inv;  // (n-m) x m combination weights
    const CMatrix a_top = a.block(0, 0, m, n);
    const CMatrix b_top = b.block(0, 0, m, n);
    const CMatrix a_new = a.block(m, 0, n - m, n) - coeff * a_top;
    a.set_block(m, 0, a_new);
    b.set_block(m, 0, CMatrix(n - m, n));
  }
  a.set_block(0, 0, b11_inv * a.block(0, 0, m, n));
  b.set_block(0, 0, b11_inv * b.block(0, 0, m, n));

  const CMatrix a11 = a.block(0, 0, m, m);
  const CMatrix a12 = a.block(0, m, m, n - m);
  const CMatrix a22 = a.block(m, m, n - m, n - m);
  const CMatrix b12 = b.block(0, m, m, n - m);

  // Admissibility forces A22 regular; a singular A22 here means the input
  // was only borderline admissible.
  if (!a22.empty()) {
    try {
      inverse(a22, tol);
    } catch (const SingularMatrix&) {
      throw NotAdmissible("trailing block is singular");
    }
  }

  STForm f;
  f.n = n;
  f.m = m;
  f.perm = perm;
  f.S = Complex(-1.0, 0.0) * (a11 + a12 * b12.conjugate_transpose());
  f.T = b12;
  return f;
}

bool couplings_equivalent(const Coupling& c1, const Coupling& c2, double tol) {
  if (c1.n != c2.n) {
    throw DimensionMismatch("couplings have different degrees");
  }
  if (!validate(c1, tol).admissible() || !validate(c2, tol).admissible()) {
    throw NotAdmissible("equivalence is defined for admissible couplings");
  }
  const CMatrix stacked =
      vstack(hstack(c1.A, c1.B), hstack(c2.A, c2.B));  // 2n x 2n
  return rank_tol(stacked, tol) == c1.n;
}

std::size_t parameter_count(const STForm& f) {
  return f.m * (2 * f.n - f.m);
}

}  // namespace qgraph

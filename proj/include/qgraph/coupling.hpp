// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "qgraph/complex_matrix.hpp"

namespace qgraph {

/// A vertex coupling A Psi + B Psi' = 0 for a degree-n vertex. Admissibility
/// (Kostrykin-Schrader): rank(A|B) = n and A B* Hermitian.
struct Coupling {
  std::size_t n = 0;
  CMatrix A;
  CMatrix B;
};

/// Canonical boundary-condition data. In the edge order given by `perm` the
/// coupling reads
///
///   [[I, T], [0, 0]] Psi' = [[S, 0], [-T*, I]] Psi
///
/// with S Hermitian m x m, T of size m x (n-m) and m = rank(B). Column l of
/// T (l in [m, n), zero-based) belongs to edge slot l; use t() for that view.
struct STForm {
  std::size_t n = 0;
  std::size_t m = 0;
  /// perm[i] = zero-based original edge index sitting at canonical slot i.
  std::vector<std::size_t> perm;
  CMatrix S;
  CMatrix T;

  /// T entry addressed by canonical slots j in [0, m), l in [m, n).
  Complex t(std::size_t j, std::size_t l) const { return T(j, l - m); }
};

struct AdmissibilityReport {
  bool rank_ok = false;
  bool hermitian_ok = false;
  std::size_t rank_found = 0;
  double hermiticity_defect = 0.0;

  bool admissible() const { return rank_ok && hermitian_ok; }
};

/// Checks both admissibility conditions on (A, B).
AdmissibilityReport validate(const Coupling& c, double tol = kDefaultTol);

/// Coupling from the unitary parametrization (U - I) Psi + i (U + I) Psi' = 0.
/// Throws NotUnitary when U U* deviates from I beyond tol.
Coupling from_unitary(const CMatrix& u, double tol = kDefaultTol);

/// Unitary matrix of the delta coupling: entries 2/(n + i alpha) - delta_jk.
CMatrix delta_unitary(std::size_t n, double alpha);

/// Canonical form of the delta coupling of strength alpha: m = 1, S = [alpha],
/// T = all ones. Edge order is the identity.
STForm delta_coupling(std::size_t n, double alpha);

/// Expands an STForm into a concrete (A, B) pair under its edge permutation.
Coupling st_to_coupling(const STForm& f);

/// Reduces an admissible coupling to its unique canonical form, choosing the
/// lexicographically smallest admissible edge permutation. Throws
/// NotAdmissible when validate fails, RankAmbiguous when the rank of B is not
/// decidable at the tolerance.
STForm to_st_form(const Coupling& c, double tol = kDefaultTol);

/// True iff the two couplings define the same boundary condition, i.e. the
/// row spaces of (A1|B1) and (A2|B2) coincide. Throws NotAdmissible if either
/// input fails validation, DimensionMismatch when the degrees differ.
bool couplings_equivalent(const Coupling& c1, const Coupling& c2,
                          double tol = kDefaultTol);

/// Number of real parameters of the family of couplings with this m: m(2n-m).
std::size_t parameter_count(const STForm& f);

}  // namespace qgraph

// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "qgraph/coupling.hpp"

namespace qgraph {

/// Signed modulus: |c| when Re c >= 0, -|c| otherwise.
double signed_modulus(Complex c);

/// Which halfline endpoints get joined by a connecting segment. Pairs {j,k}
/// (j != k, canonical slots, zero-based) are joined when
///   - j < m, k >= m and T_jk != 0,
///   - j, k < m and T_jl, T_kl != 0 for some common l >= m, or
///   - j, k < m and S_jk != 0.
/// Zero tests are relative (1e-12) to the largest entry of S resp. T.
struct ApproxTopology {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::vector<std::size_t>> neighbor_sets;  // sorted, per vertex
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // j < k, sorted

  bool connected(std::size_t j, std::size_t k) const;
};

ApproxTopology neighbor_sets(const STForm& f);

/// d-dependent strengths of the approximating network: a delta coupling v_j
/// at each halfline endpoint V_j, a delta interaction w_{j,k} at the middle
/// of each connecting segment, and a constant vector potential a_{(j,k)} on
/// each segment half (antisymmetric in the direction).
struct ApproxParams {
  double d = 0.0;
  ApproxTopology topology;
  std::vector<double> v;                                  // size n
  std::map<std::pair<std::size_t, std::size_t>, double> w;  // key j < k
  std::map<std::pair<std::size_t, std::size_t>, double> a;  // key j < k

  double w_of(std::size_t j, std::size_t k) const;
  /// Signed potential for the ordered half (j, k): a_of(k, j) = -a_of(j, k).
  double a_of(std::size_t j, std::size_t k) const;
};

/// Closed-form parameters at edge half-length d:
///   v_l = (1 - #N_l + sum_h <T_hl>) / d                        l >= m
///   w_{j,l} = (1/d)(-2 + 1/<T_jl>)                             j < m <= l
///   a_{(j,l)} = arg(T_jl)/(2d), shifted by -pi/(2d) when Re T_jl < 0
///   w_{j,k} from 1/(2 + d w) = -<c>,  c = d S_jk + sum_l T_jl conj(T_kl)
///   a_{(j,k)} = arg(c)/(2d), shifted by -pi/(2d) when Re c < 0   j,k < m
///   v_j = S_jj - #N_j/d - sum_{k in N_j, k<m} <S_jk + (1/d) sum_l T_jl conj(T_kl)>
///         + (1/d) sum_l (1 + <T_jl>) <T_jl>                    j < m
/// Throws DegenerateDenominator when <c> vanishes for a connected pair
/// {j,k} within the first group; perturbing d resolves that.
ApproxParams build_params(const STForm& f, double d);

/// One limit condition evaluated along a d-sequence.
struct LimitCheckEntry {
  std::size_t j = 0;
  std::size_t k = 0;  // unused for the first condition
  std::vector<double> values;
  double expected = 0.0;
  bool finite = true;
};

/// Values of the three closure conditions of the construction:
///   (1) d v_l + #N_l - sum_k 1/(2 + d w_{l,k})  -> 1        for l >= m
///   (2) 1/(2 + d w_{j,k})                       -> <T_kj>   for j >= m, k in N_j
///   (7) 1/(2 + d w_{j,k})                       -> -<sum_l T_jl conj(T_kl)>
///                                                           for j,k < m connected
struct LimitCheckReport {
  std::vector<double> d_values;
  std::vector<LimitCheckEntry> condition1;
  std::vector<LimitCheckEntry> condition2;
  std::vector<LimitCheckEntry> condition7;

  bool empty() const {
    return condition1.empty() && condition2.empty() && condition7.empty();
  }
};

/// Evaluates the conditions at every d in the (decreasing) sequence. A form
/// with no edges yields an empty report. Propagates DegenerateDenominator.
LimitCheckReport check_limits(const STForm& f,
                              const std::vector<double>& d_sequence);

}  // namespace qgraph

// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "qgraph/resolvent.hpp"

namespace qgraph {

/// Quadrature setup for the Hilbert-Schmidt integrals. The halfline is split
/// into the panels [0, 1/Re kappa] and [1/Re kappa, x_max] with Gauss-Legendre
/// nodes on each; segments use one Gauss-Legendre rule on [0, d].
struct QuadConfig {
  double x_max = 0.0;  // 0 = choose 20 / Re kappa
  std::size_t nodes_halfline = 64;  // per panel
  std::size_t nodes_segment = 64;
  double tail_tol = 1e-10;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(std::size_t n, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Exact halfline-halfline Hilbert-Schmidt mass of the rank-one difference:
/// sum |delta_lambda|^2 / (2 Re kappa)^2.
double hs_nn_closed_form(const CMatrix& delta_lambda, Complex kappa);

/// Squared Hilbert-Schmidt contributions of the four kernel-difference
/// blocks; the halfline-halfline part compares against the star graph, the
/// other three integrate the approximating kernel alone.
struct KernelDifferenceBlockNorms {
  double nn = 0.0;
  double nj = 0.0;
  double jn = 0.0;
  double jj = 0.0;

  double total() const { return nn + nj + jn + jj; }
};

/// Computes the blocks at edge half-length d. The halfline-halfline block is
/// the closed form above on Minv - Lambda; the mixed and segment blocks are
/// evaluated by product quadrature. Doubling the node counts must move the
/// total by no more than 1e-4 relative or QuadratureNotConverged is thrown;
/// the refined value is returned. Propagates DegenerateDenominator, SingularM.
KernelDifferenceBlockNorms hs_norm_difference(const STForm& f, double d,
                                              SpectralPoint sp,
                                              const QuadConfig& q);

struct ConvergenceReport {
  Complex kappa;
  std::vector<double> d_values;
  std::vector<double> hs_norms;  // Hilbert-Schmidt norms (not squared)
  std::vector<KernelDifferenceBlockNorms> blocks;
  double slope = 0.0;      // least-squares fit of log hs against log d
  double intercept = 0.0;
  double envelope_c = 0.0;  // hs(d_max) / sqrt(d_max)
  bool envelope_ok = false; // hs(d) <= envelope_c sqrt(d) at all smaller d
};

/// Sweeps a decreasing list of edge half-lengths (at least three) and fits
/// the convergence rate. Throws InsufficientPoints otherwise.
ConvergenceReport convergence_sweep(const STForm& f,
                                    const std::vector<double>& d_values,
                                    SpectralPoint sp, const QuadConfig& q);

}  // namespace qgraph
